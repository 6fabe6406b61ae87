#
# Any machine specific settings when using development settings.
#

# Allow the brute-force oracle to go a little further on a fast machine.
# VEDS_BRUTE_FORCE_MAX_VERTICES = 24

# Run independent bench and cross-check trials on four processes.
# VEDS_BENCH_WORKERS = 4
