from django.conf import settings
from django.core.checks import Error, register

CAPACITY_SETTINGS = (
    "VEDS_BRUTE_FORCE_MAX_VERTICES",
    "VEDS_EXHAUSTIVE_ORDER_MAX_Y",
    "VEDS_MIN_COVER_MAX_SETS",
    "VEDS_GENERATOR_MAX_RETRIES",
    "VEDS_BENCH_WORKERS",
)

# 2**30 candidate subsets is already hours of work
BRUTE_FORCE_CEILING = 30


@register()
def check_capacities(app_configs, **kwargs):
    """
    Check that the capacity settings are positive integers.

    A zero or negative capacity silently turns every oracle call into a
    capacity error, which is hard to tell apart from a real refusal.
    """
    errors = []

    for name in CAPACITY_SETTINGS:
        value = getattr(settings, name, None)
        if isinstance(value, int) and value > 0:
            continue
        errors.append(
            Error(
                "%s must be a positive integer, got %r" % (name, value),
                hint="Set %s in the environment or in local.py" % name,
                id="utils.E001",
            )
        )

    if any(not isinstance(size, int) or size < 1 for size in settings.VEDS_BENCH_SIZES):
        errors.append(
            Error(
                "VEDS_BENCH_SIZES must list positive integers, got %r"
                % (settings.VEDS_BENCH_SIZES,),
                id="utils.E002",
            )
        )

    limit = settings.VEDS_BRUTE_FORCE_MAX_VERTICES
    if isinstance(limit, int) and limit > BRUTE_FORCE_CEILING:
        errors.append(
            Error(
                "VEDS_BRUTE_FORCE_MAX_VERTICES=%d enumerates up to 2**%d subsets"
                % (limit, limit),
                hint="Keep it at %d or below" % BRUTE_FORCE_CEILING,
                id="utils.E003",
            )
        )

    return errors
