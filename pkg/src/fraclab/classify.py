"""Complexity verdicts for #Sub, #IndSub and #Hom from declared class flags.

Density and finiteness of invariants are properties of infinite classes, so
they are inputs here, never computed. Flags may be ``unknown``; every
consistent way of filling them in is tried, and the verdict is returned only
when all of them agree.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, fields, replace

from fraclab.errors import InconsistentFlags, InvalidInput


class Finiteness(str, enum.Enum):
    FINITE = "finite"
    INFINITE = "infinite"
    UNKNOWN = "unknown"

    @classmethod
    def parse(cls, value) -> "Finiteness":
        if isinstance(value, Finiteness):
            return value
        text = str(value).strip().lower()
        aliases = {"fin": "finite", "<inf": "finite", "inf": "infinite", "=inf": "infinite", "?": "unknown"}
        try:
            return cls(aliases.get(text, text))
        except ValueError:
            raise InvalidInput(f"bad finiteness flag {value!r}; use finite, infinite or unknown") from None


class Density(str, enum.Enum):
    NOWHERE = "nowhere dense"
    SOMEWHERE = "somewhere dense"
    UNKNOWN = "unknown"

    @classmethod
    def parse(cls, value) -> "Density":
        if isinstance(value, Density):
            return value
        text = str(value).strip().lower().replace("-", " ").replace("_", " ")
        aliases = {"nowhere": "nowhere dense", "nd": "nowhere dense", "somewhere": "somewhere dense", "sd": "somewhere dense", "?": "unknown"}
        try:
            return cls(aliases.get(text, text))
        except ValueError:
            raise InvalidInput(f"bad density flag {value!r}") from None


FIN, INF, UNK = Finiteness.FINITE, Finiteness.INFINITE, Finiteness.UNKNOWN
PATTERN_CLOSURES = ("monotone", "hereditary", "minor-closed")


@dataclass(frozen=True)
class PatternClassFlags:
    closure: str = "hereditary"
    size: Finiteness = UNK
    m: Finiteness = UNK
    m_ind: Finiteness = UNK
    beta_ind: Finiteness = UNK
    omega: Finiteness = UNK
    alpha: Finiteness = UNK
    tw: Finiteness = UNK

    def __post_init__(self):
        if self.closure not in PATTERN_CLOSURES:
            raise InvalidInput(f"pattern closure must be one of {', '.join(PATTERN_CLOSURES)}")
        for f in fields(self)[1:]:
            object.__setattr__(self, f.name, Finiteness.parse(getattr(self, f.name)))

    @property
    def is_monotone(self) -> bool:
        # minor-closed classes are closed under subgraphs
        return self.closure in ("monotone", "minor-closed")


@dataclass(frozen=True)
class HostClassFlags:
    closure: str = "monotone"
    density: Density = Density.UNKNOWN
    omega: Finiteness = UNK
    beta: Finiteness = UNK
    alpha: Finiteness = UNK

    def __post_init__(self):
        if self.closure != "monotone":
            raise InvalidInput("only monotone host classes are classified; hereditary hosts are open")
        object.__setattr__(self, "density", Density.parse(self.density))
        for f in fields(self)[2:]:
            object.__setattr__(self, f.name, Finiteness.parse(getattr(self, f.name)))


HARD_BOUND = "no f·n^{o(k/log k)}"
TIGHT_BOUND = "no f·n^{o(k)}"
TW_BOUND = "no f·n^{o(tw)}"


@dataclass(frozen=True)
class Verdict:
    klass: str  # P, FPT, HARD, HARD_TIGHT, UNCLASSIFIED
    lower_bound: str | None
    citation: str

    def __post_init__(self):
        if self.klass.startswith("HARD") and not (self.lower_bound and self.citation):
            raise ValueError("hard verdicts need a lower bound and a citation")

    @property
    def text(self) -> str:
        bound = f" ({self.lower_bound})" if self.lower_bound else ""
        return f"{self.klass}{bound} [{self.citation}]"

    def as_dict(self) -> dict:
        return {"class": self.klass, "lower_bound": self.lower_bound, "citation": self.citation}


# -- consistency rules -----------------------------------------------------
# Each rule returns True when the (fully resolved) flags are consistent.

def _pattern_rules(h: PatternClassFlags):
    inf = lambda x: x is INF  # noqa: E731
    yield ("ramsey-matching",
           "a class with unbounded matchings has unbounded induced matchings, induced bicliques or cliques",
           not inf(h.m) or inf(h.m_ind) or inf(h.beta_ind) or inf(h.omega))
    yield ("ramsey-size",
           "an infinite class has unbounded independent sets or cliques",
           not inf(h.size) or inf(h.alpha) or inf(h.omega))
    yield ("finite-class",
           "a finite class has every invariant bounded",
           inf(h.size) or not any(inf(x) for x in (h.m, h.m_ind, h.beta_ind, h.omega, h.alpha, h.tw)))
    yield ("matching-bound",
           "m bounds m_ind, beta_ind, omega/2 and tw/2 from above",
           inf(h.m) or not any(inf(x) for x in (h.m_ind, h.beta_ind, h.omega, h.tw)))
    yield ("treewidth-bound",
           "omega and beta_ind are at most tw + 1",
           inf(h.tw) or not (inf(h.omega) or inf(h.beta_ind)))
    if h.is_monotone:
        yield ("monotone-pattern",
               "a monotone class with unbounded matchings contains all matchings, with unbounded cliques "
               "contains all bicliques, and if infinite contains all edgeless graphs",
               (not inf(h.m) or inf(h.m_ind))
               and (not inf(h.omega) or inf(h.beta_ind))
               and (not inf(h.size) or inf(h.alpha)))


def _host_rules(g: HostClassFlags):
    sd = g.density is Density.SOMEWHERE
    yield ("host-clique-density",
           "a monotone host class with unbounded cliques is somewhere dense and has unbounded bicliques",
           g.omega is not INF or (sd and g.beta is INF))
    yield ("host-biclique-density",
           "a monotone host class with unbounded bicliques contains all 1-subdivided cliques, so is somewhere dense",
           g.beta is not INF or sd)
    yield ("host-independence",
           "a somewhere dense monotone host class has unbounded independent sets",
           not sd or g.alpha is INF)


def _violations(h: PatternClassFlags, g: HostClassFlags):
    return [(name, text) for name, text, ok in (*_pattern_rules(h), *_host_rules(g)) if not ok]


def check_consistency(h: PatternClassFlags, g: HostClassFlags) -> None:
    """Raise :class:`InconsistentFlags` when no resolution of the unknown flags is consistent."""
    completions = list(_completions(h, g))
    if any(not _violations(hh, gg) for hh, gg in completions):
        return
    firsts = [_violations(hh, gg)[0] for hh, gg in completions]
    common = [v for v in firsts[0:1] if all(v in _violations(hh, gg) for hh, gg in completions)]
    name, text = common[0] if common else firsts[0]
    raise InconsistentFlags(f"inconsistent class flags: {text}", name)


def _completions(h: PatternClassFlags, g: HostClassFlags):
    h_unknown = [f.name for f in fields(h)[1:] if getattr(h, f.name) is UNK]
    g_unknown = [f.name for f in fields(g)[2:] if getattr(g, f.name) is UNK]
    dens = [Density.NOWHERE, Density.SOMEWHERE] if g.density is Density.UNKNOWN else [g.density]
    for hv in itertools.product((FIN, INF), repeat=len(h_unknown)):
        hh = replace(h, **dict(zip(h_unknown, hv)))
        for d in dens:
            for gv in itertools.product((FIN, INF), repeat=len(g_unknown)):
                yield hh, replace(g, density=d, **dict(zip(g_unknown, gv)))


def _resolve(h, g, decide, names: str) -> Verdict:
    check_consistency(h, g)
    verdicts = [decide(hh, gg) for hh, gg in _completions(h, g) if not _violations(hh, gg)]
    if len({(v.klass, v.lower_bound) for v in verdicts}) == 1:
        citations = sorted({v.citation for v in verdicts})
        if len(citations) == 1:
            return verdicts[0]
        return Verdict(verdicts[0].klass, verdicts[0].lower_bound, "; ".join(citations))
    return Verdict(
        "UNCLASSIFIED", None,
        f"open: the verdict depends on {names} flags declared unknown",
    )


# -- the tables ------------------------------------------------------------

def _sub_row(h):
    if h.m is FIN:
        return 0
    if h.m_ind is INF:
        return 1
    if h.beta_ind is INF:
        return 2
    return 3  # ramsey-matching guarantees omega = inf here


def _sub_col(g):
    if g.density is Density.NOWHERE:
        return 0
    if g.omega is INF:
        return 1
    return 2 if g.beta is INF else 3


SUB_ROWS = (
    "m(H) < inf",
    "m_ind(H) = inf",
    "m_ind(H) < inf, beta_ind(H) = inf",
    "m_ind(H), beta_ind(H) < inf, omega(H) = inf",
)
SUB_COLS = (
    "G nowhere dense",
    "G somewhere dense, omega(G) = inf",
    "G somewhere dense, omega(G) < inf, beta(G) = inf",
    "G somewhere dense, omega(G) < inf, beta(G) < inf",
)
SUB_TABLE = (
    ("P", "P", "P", "P"),
    ("FPT", "HARD", "HARD", "HARD"),
    ("P", "HARD_TIGHT", "HARD_TIGHT", "P"),
    ("P", "HARD_TIGHT", "P", "P"),
)

INDSUB_ROWS = ("H finite", "alpha(H) = inf", "alpha(H) < inf, omega(H) = inf")
INDSUB_COLS = (
    "G nowhere dense",
    "G somewhere dense, omega(G) = inf",
    "G somewhere dense, omega(G) < inf, alpha(G) = inf",
)
INDSUB_TABLE = (
    ("P", "P", "P"),
    ("FPT", "HARD_TIGHT", "HARD"),
    ("P", "HARD_TIGHT", "P"),
)

_BOUNDS = {"HARD": HARD_BOUND, "HARD_TIGHT": TIGHT_BOUND}


def _cell(problem, rows, cols, table, i, j) -> Verdict:
    klass = table[i][j]
    return Verdict(klass, _BOUNDS.get(klass), f"{problem} dichotomy table: row '{rows[i]}', column '{cols[j]}'")


def _sub_decide(h, g):
    return _cell("#Sub", SUB_ROWS, SUB_COLS, SUB_TABLE, _sub_row(h), _sub_col(g))


def _indsub_decide(h, g):
    i = 0 if h.size is FIN else (1 if h.alpha is INF else 2)
    if g.density is Density.NOWHERE:
        j = 0
    else:
        j = 1 if g.omega is INF else 2
    return _cell("#IndSub", INDSUB_ROWS, INDSUB_COLS, INDSUB_TABLE, i, j)


def _hom_decide(h, g):
    if h.tw is FIN:
        return Verdict("P", None, "#Hom for monotone patterns: bounded treewidth, time n^(t+1) from a width-t decomposition")
    if g.density is Density.NOWHERE:
        return Verdict("FPT", None, "#Hom into nowhere dense hosts: fixed-parameter tractable")
    return Verdict("HARD", TW_BOUND, "#Hom for monotone patterns into somewhere dense hosts: unbounded treewidth")


def classify_sub(h: PatternClassFlags, g: HostClassFlags) -> Verdict:
    return _resolve(h, g, _sub_decide, "matching, induced-matching, biclique, clique or density")


def classify_indsub(h: PatternClassFlags, g: HostClassFlags) -> Verdict:
    return _resolve(h, g, _indsub_decide, "size, independence, clique or density")


def classify_hom(h: PatternClassFlags, g: HostClassFlags) -> Verdict:
    if not h.is_monotone:
        raise InvalidInput(
            "#Hom is classified for monotone pattern classes only; for hereditary classes treewidth "
            "is not the right criterion (all cliques into bipartite hosts is trivial)"
        )
    return _resolve(h, g, _hom_decide, "treewidth or density")
