"""Lower and upper bounds used to seed and certify the exact solver."""
import logging
from collections import Counter

from src.exceptions import InvalidParameterError
from src.graph_core import corona_shape, cut_vertices, diameter, twin_classes
from src.models import BoundKind, BoundReport, BoundRule, Graph, Justification, Target

logger = logging.getLogger(__name__)


def rvc_lower(g: Graph) -> BoundReport:
    """
    Lower bound on rvc(g) from cut vertices and the diameter.

    Every cut vertex is internal to some forced path, so cut vertices need
    pairwise distinct colors; a diametral pair needs diam-1 distinct internal
    colors.
    """
    cuts = len(cut_vertices(g))
    diam = diameter(g)
    justifications = [
        Justification(value=cuts, rule=BoundRule.LEMMA_CUT, reason=f"{cuts} cut vertices"),
        Justification(value=max(diam - 1, 0), rule=BoundRule.DIAM, reason=f"diameter {diam}"),
    ]
    lower = max(cuts, diam - 1, 0)
    return BoundReport(target=Target.RVC, lower=lower, justifications=justifications)


def rvcl_upper_corona(m: int, n: int, core_edges: int) -> int:
    """
    Upper bound m + n + |E(G_m)| - 1 on rvcl(G_m ⋄ K_n).

    Raises:
        InvalidParameterError: m < 2, n < 2 or core_edges < 1
    """
    if m < 2 or n < 2 or core_edges < 1:
        raise InvalidParameterError(
            f"corona upper bound needs m >= 2, n >= 2, |E| >= 1; got ({m}, {n}, {core_edges})"
        )
    return m + n + core_edges - 1


def rvcl_lower(g: Graph) -> BoundReport:
    """
    Lower bound on rvcl(g), plus the corona upper bound when g is G_m ⋄ K_n.

    Rules: rvcl >= rvc; twins need distinct colors; two disjoint twin
    classes of equal size t force t+1 colors; coronas with complete flares
    and m >= 3 need n+1 colors.
    """
    justifications = [
        Justification(value=rvc_lower(g).lower, rule=BoundRule.EQ1, reason="rvcl >= rvc lower bound"),
    ]

    partition = twin_classes(g)
    justifications.append(
        Justification(
            value=partition.largest,
            rule=BoundRule.LEMMA_TWIN,
            reason=f"largest twin class has {partition.largest} vertices",
        )
    )

    sizes = Counter(len(members) for members in partition.nontrivial())
    repeated = [size for size, count in sizes.items() if count >= 2]
    if repeated:
        t = max(repeated)
        justifications.append(
            Justification(
                value=t + 1,
                rule=BoundRule.LEMMA_TWO_CLASSES,
                reason=f"{sizes[t]} disjoint twin classes of size {t}",
            )
        )

    upper = None
    shape = corona_shape(g)
    if shape is not None and shape.flares_complete:
        if shape.core_order >= 3:
            justifications.append(
                Justification(
                    value=shape.flare_order + 1,
                    rule=BoundRule.LEMMA_N_PLUS_1,
                    reason=f"corona with K_{shape.flare_order} flares and {shape.core_order} core vertices",
                )
            )
        if shape.flare_order >= 2:
            upper = rvcl_upper_corona(shape.core_order, shape.flare_order, shape.core_edges)
            justifications.append(
                Justification(
                    value=upper,
                    rule=BoundRule.THM_UPPER_CORONA,
                    kind=BoundKind.UPPER,
                    reason=f"m={shape.core_order}, n={shape.flare_order}, |E|={shape.core_edges}",
                )
            )

    lower = max(j.value for j in justifications if j.kind == BoundKind.LOWER)
    report = BoundReport(target=Target.RVCL, lower=lower, upper=upper, justifications=justifications)
    logger.debug(f"rvcl bounds for {g.name}: [{report.lower}, {report.upper}] via {report.lower_rule}")
    return report


def bounds_for(g: Graph, target: Target) -> BoundReport:
    """Bound report for either target."""
    if target == Target.RVC:
        return rvc_lower(g)
    return rvcl_lower(g)
