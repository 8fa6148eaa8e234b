"""Per-graph analysis report and the random search for large top-separator ratios."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import budgets
from .classes import detect_classes
from .errors import BudgetError
from .graph import Graph, is_clique
from .oracle import random_connected_graph
from .separators import close_separators
from .solver import SolveConfig, separator_heights, treedepth
from .treewidth import bounds, exact_width_of


@dataclass
class AnalysisReport:
    n: int
    m: int
    tw_lower: int
    tw_upper: int
    tw: int | None  # exact, when within budget
    td: int
    separators: int  # |Δ|, or the count of separators up to ``separator_bound``
    separator_bound: int | None
    opt_sep_min: int | None  # over the optimal top separators
    opt_sep_max: int | None
    opt_sep_count: int | None
    ratio: Fraction | None  # opt_sep_min / tw
    classes: list[str] = field(default_factory=list)
    stats: dict[str, int] = field(default_factory=dict)

    def key_values(self) -> list[tuple[str, str]]:
        def show(x) -> str:
            return "n/a" if x is None else str(x)

        rows = [
            ("n", str(self.n)),
            ("m", str(self.m)),
            ("tw_lower", str(self.tw_lower)),
            ("tw_upper", str(self.tw_upper)),
            ("tw", show(self.tw)),
            ("td", str(self.td)),
            ("separators", str(self.separators)),
            ("separator_bound", show(self.separator_bound)),
            ("opt_separators", show(self.opt_sep_count)),
            ("opt_sep_min", show(self.opt_sep_min)),
            ("opt_sep_max", show(self.opt_sep_max)),
            ("ratio", show(self.ratio)),
            ("ratio_decimal", "n/a" if self.ratio is None else f"{float(self.ratio):.6f}"),
            ("classes", ",".join(self.classes) or "none"),
        ]
        rows += [(f"stats.{k}", str(v)) for k, v in self.stats.items()]
        return rows

    def render(self) -> str:
        tw = "n/a (over exact budget)" if self.tw is None else str(self.tw)
        if self.separator_bound is None:
            seps = f"{self.separators} minimal separators"
        else:
            seps = f"{self.separators} minimal separators of size <= {self.separator_bound}"
        if self.opt_sep_count is None:
            opt = "optimal top separators: n/a"
        else:
            opt = (
                f"optimal top separators: {self.opt_sep_count}, "
                f"sizes {self.opt_sep_min}..{self.opt_sep_max}"
            )
        lines = [
            f"graph: {self.n} vertices, {self.m} edges",
            f"treewidth: {tw} (bounds {self.tw_lower}..{self.tw_upper})",
            f"treedepth: {self.td}",
            seps,
            opt,
            f"ratio min|S*|/tw: {'n/a' if self.ratio is None else self.ratio}",
            f"classes: {', '.join(self.classes) or 'none'}",
            "",
        ]
        lines += [f"{k}={v}" for k, v in self.key_values()]
        return "\n".join(lines) + "\n"


def _exact_tw(g: Graph, lower: int, upper: int) -> int | None:
    if lower == upper:
        return upper
    try:
        return exact_width_of(g, g.all)[0]
    except BudgetError:
        return None


def analyze(g: Graph, cfg: SolveConfig | None = None) -> AnalysisReport:
    """Bounds, td, separator counts and, for connected non-complete graphs
    within the ``top_separators`` budget, the sizes of the optimal top
    separators. Fields that are not computed are None (shown as n/a)."""
    b = bounds(g)
    tw = _exact_tw(g, b.lower, b.upper)
    result = treedepth(g, cfg)
    if tw is not None:
        sep_bound = None
        count = len(close_separators(g, g.all).kept)
    else:
        # full enumeration can be exponential; count the ones the solver may use
        sep_bound = 2 * b.upper
        count = len(close_separators(g, g.all, sep_bound).kept)
    connected = g.n > 0 and len(g.packed.components(g.all)) == 1
    lo = hi = cnt = None
    ratio = None
    small = g.n <= budgets.get("top_separators")
    if tw is not None and small and connected and not is_clique(g, g.all):
        td, heights = separator_heights(g)
        sizes = [s.bit_count() for s, h in heights.items() if h == td]
        lo, hi, cnt = min(sizes), max(sizes), len(sizes)
        ratio = Fraction(lo, tw)
    classes = detect_classes(g)  # outerplanarity is skipped above the minor budget
    return AnalysisReport(
        n=g.n,
        m=g.m,
        tw_lower=b.lower,
        tw_upper=b.upper,
        tw=tw,
        td=result.td,
        separators=count,
        separator_bound=sep_bound,
        opt_sep_min=lo,
        opt_sep_max=hi,
        opt_sep_count=cnt,
        ratio=ratio,
        classes=classes,
        stats=result.stats.as_dict(),
    )


def min_top_separator_ratio(g: Graph) -> tuple[Fraction, int, int]:
    """(min|S*| / tw, min|S*|, tw) for a connected non-complete graph."""
    tw = exact_width_of(g, g.all)[0]
    td, heights = separator_heights(g)
    smallest = min(s.bit_count() for s, h in heights.items() if h == td)
    return Fraction(smallest, tw), smallest, tw


@dataclass
class RatioSearch:
    max_ratio: Fraction
    witness: Graph | None
    witness_sep: int
    witness_tw: int
    sampled: int
    skipped_complete: int
    violations: list[Graph]  # graphs with min|S*| > 2 tw; must stay empty


def search_ratio(
    max_n: int,
    samples: int,
    seed: int,
    min_n: int = 4,
    p_range: tuple[float, float] = (0.2, 0.8),
) -> RatioSearch:
    """Sample connected G(n, p) graphs (n uniform in [min_n, max_n], p uniform
    in ``p_range``) and keep the one with the largest min|S*| / tw."""
    if max_n < min_n:
        min_n = max_n
    rng = random.Random(seed)
    out = RatioSearch(Fraction(0), None, 0, 0, 0, 0, [])
    for _ in range(samples):
        n = rng.randint(min_n, max_n)
        p = rng.uniform(*p_range)
        g = random_connected_graph(rng, n, p)
        out.sampled += 1
        if is_clique(g, g.all):
            out.skipped_complete += 1
            continue
        ratio, smallest, tw = min_top_separator_ratio(g)
        if smallest > 2 * tw:
            out.violations.append(g)
        if ratio > out.max_ratio:
            out.max_ratio, out.witness, out.witness_sep, out.witness_tw = ratio, g, smallest, tw
    return out
