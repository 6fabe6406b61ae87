from djchoices import ChoiceItem, DjangoChoices


class Side(DjangoChoices):
    x = ChoiceItem(
        "x", "X side", description="The side whose neighbourhoods are intervals."
    )
    y = ChoiceItem("y", "Y side", description="The side carrying the convex ordering.")


class Branch(DjangoChoices):
    universal = ChoiceItem(
        "universal",
        "Universal vertex",
        description="A vertex adjacent to the whole opposite side ends the recursion.",
    )
    gprime = ChoiceItem(
        "gprime", "G'", description="The rightmost neighbour of y1 joins the witness."
    )
    gtilde = ChoiceItem(
        "gtilde",
        "G~",
        description="The last y in N(x1) adjacent to all of J1 joins the witness.",
    )
    component_split = ChoiceItem(
        "component_split",
        "Component split",
        description="A disconnected subproblem is solved per component.",
    )
    chain = ChoiceItem(
        "chain", "Chain pivot", description="One pivot per chain of the decomposition."
    )


class Algorithm(DjangoChoices):
    exact = ChoiceItem("exact", "Exact recursion")
    baseline = ChoiceItem("baseline", "Chain pivots (not always minimum)")
    bruteforce = ChoiceItem("bruteforce", "Exhaustive search")


class OutputMode(DjangoChoices):
    text = ChoiceItem("text", "Aligned text")
    json = ChoiceItem("json", "JSON")
