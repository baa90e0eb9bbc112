"""Exhaustive verification of the extremal minima and bounds.

Every claim is checked two ways where possible: graph-level by
isomorph-free enumeration, and sequence-level by degree-sequence
enumeration (sound because the total irregularity is a function of the
degree sequence and the tree/unicyclic/bicyclic families are exactly the
connected-realizable sequences with m = n-1, n, n+1).  The two routes are
cross-checked against each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .enumeration import (
    CanonicalCode,
    SizeLimitError,
    canonical_form,
    enumerate_bicyclic_by_class,
    enumerate_connected,
    enumerate_trees,
)
from .graph import (
    Graph,
    GraphKind,
    degree_sequence,
    edge_irregularity,
    irr_t_of_sequence,
    total_irregularity,
)
from .sequences import SequenceFamilyConstraint, enumerate_sequences

__all__ = [
    "FAMILIES",
    "RankedValue",
    "ExpectedRank",
    "VerificationReport",
    "BoundsReport",
    "Counterexample",
    "ConjectureEntry",
    "ConjectureReport",
    "k_minimal",
    "k_minimal_graph_level",
    "k_minimal_sequence_level",
    "verify_trees",
    "verify_unicyclic",
    "verify_bicyclic",
    "verify_bounds",
    "check_conjecture",
    "MAX_SEQUENCE_CONJECTURE_N",
]

FAMILIES = (
    "Tree",
    "Unicyclic",
    "BicyclicAll",
    "BicyclicInfinityL1",
    "BicyclicInfinityL2plus",
    "BicyclicTheta",
    "ConnectedAll",
)

_SEQUENCE_FAMILIES = {
    "Tree": -1,
    "Unicyclic": 0,
    "BicyclicAll": 1,
}  # family -> m - n

MAX_SEQUENCE_CONJECTURE_N = 16


@dataclass(frozen=True)
class RankedValue:
    """One rank of a family: the value, all attaining sorted degree
    sequences and the number of attaining graphs."""

    value: int
    sequences: tuple[tuple[int, ...], ...]
    count: int


@dataclass(frozen=True)
class ExpectedRank:
    value: int
    sequences: tuple[tuple[int, ...], ...]


@dataclass
class VerificationReport:
    """Ranked minima of one family at one order, judged against the
    closed forms.  Verdicts are per rank: ``pass``/``fail`` when the order
    is at or above the rank's validity threshold, ``info`` below it."""

    family: str
    n: int
    ranked_minima: list[RankedValue]
    expected: list[ExpectedRank | None]
    verdict: list[str]

    def passed(self) -> bool:
        return all(v != "fail" for v in self.verdict)

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "n": self.n,
            "ranks": [
                {
                    "value": r.value,
                    "sequences": [list(s) for s in r.sequences],
                    "count": r.count,
                }
                for r in self.ranked_minima
            ],
            "expected": [
                None
                if e is None
                else {"value": e.value, "sequences": [list(s) for s in e.sequences]}
                for e in self.expected
            ],
            "verdict": list(self.verdict),
        }


def _family_graphs(family: str, n: int, threads: int) -> Iterator[Graph]:
    if family == "Tree":
        yield from enumerate_trees(n, threads=threads)
    elif family == "Unicyclic":
        yield from enumerate_connected(n, n, threads=threads)
    elif family == "BicyclicAll":
        yield from enumerate_connected(n, n + 1, threads=threads)
    elif family == "ConnectedAll":
        yield from enumerate_connected(n, None, threads=threads)
    elif family in ("BicyclicInfinityL1", "BicyclicInfinityL2plus", "BicyclicTheta"):
        kind = GraphKind(family)
        for g, cls in enumerate_bicyclic_by_class(n, threads=threads):
            if cls.kind is kind:
                yield g
    else:
        raise ValueError(f"unknown family {family!r}")


def k_minimal_graph_level(
    family: str,
    n: int,
    k: int,
    threads: int = 1,
    with_codes: bool = False,
) -> list[RankedValue] | tuple[list[RankedValue], dict[int, list[CanonicalCode]]]:
    """The ``k`` smallest distinct index values over the enumerated family.

    With ``with_codes`` the canonical codes of the attaining graphs are
    returned as well (keyed by value); use only on small families.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    by_value: dict[int, dict[tuple[int, ...], int]] = {}
    codes: dict[int, list[CanonicalCode]] = {}
    for g in _family_graphs(family, n, threads):
        value = total_irregularity(g)
        seqs = by_value.setdefault(value, {})
        seq = degree_sequence(g)
        seqs[seq] = seqs.get(seq, 0) + 1
        if with_codes:
            codes.setdefault(value, []).append(canonical_form(g))
    ranks = []
    for value in sorted(by_value)[:k]:
        seqs = by_value[value]
        ranks.append(
            RankedValue(
                value=value,
                sequences=tuple(sorted(seqs, reverse=True)),
                count=sum(seqs.values()),
            )
        )
    if with_codes:
        kept = {r.value: codes[r.value] for r in ranks}
        return ranks, kept
    return ranks


def k_minimal_sequence_level(family: str, n: int, k: int) -> list[tuple[int, tuple[tuple[int, ...], ...]]]:
    """Sequence-level ranked minima for the families determined by their
    edge count (trees, unicyclic, bicyclic) or for all connected graphs."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if family in _SEQUENCE_FAMILIES:
        m_values: Iterable[int] = (n + _SEQUENCE_FAMILIES[family],)
    elif family == "ConnectedAll":
        m_values = range(max(0, n - 1), n * (n - 1) // 2 + 1)
    else:
        raise ValueError(f"family {family!r} is not decidable at sequence level")
    by_value: dict[int, set[tuple[int, ...]]] = {}
    for m in m_values:
        constraint = SequenceFamilyConstraint(
            n=n, m=m, min_degree=1, require_connected_realizable=True
        )
        for seq in enumerate_sequences(constraint):
            by_value.setdefault(irr_t_of_sequence(seq), set()).add(seq)
    return [
        (value, tuple(sorted(by_value[value], reverse=True)))
        for value in sorted(by_value)[:k]
    ]


def k_minimal(family: str, n: int, k: int, threads: int = 1) -> list[RankedValue]:
    """Graph-level ranked minima, cross-checked at sequence level where
    the family is determined by the degree sequence."""
    ranks = k_minimal_graph_level(family, n, k, threads=threads)
    if family in _SEQUENCE_FAMILIES or family == "ConnectedAll":
        seq_ranks = k_minimal_sequence_level(family, n, k)
        flat = [(r.value, r.sequences) for r in ranks]
        if flat != seq_ranks:
            raise RuntimeError(
                f"graph-level and sequence-level minima disagree for "
                f"{family} n={n}: {flat} vs {seq_ranks}"
            )
    return ranks


def _composition(*parts: tuple[int, int]) -> tuple[int, ...] | None:
    out: list[int] = []
    for value, count in parts:
        if count < 0:
            return None
        out.extend([value] * count)
    return tuple(out)


def _expected_table(family: str, n: int) -> list[tuple[int, tuple[int, ...] | None, int]]:
    """(expected value, expected sequence or None, validity threshold) per
    rank for the family at order n."""
    if family == "Tree":
        return [
            (2 * n - 4, _composition((2, n - 2), (1, 2)), 2),
            (4 * n - 10, _composition((3, 1), (2, n - 4), (1, 3)), 5),
            (6 * n - 20, _composition((3, 2), (2, n - 6), (1, 4)), 6),
        ]
    if family == "Unicyclic":
        return [
            (0, _composition((2, n)), 3),
            (2 * n - 2, _composition((3, 1), (2, n - 2), (1, 1)), 4),
            (4 * n - 8, _composition((3, 2), (2, n - 4), (1, 2)), 5),
        ]
    if family == "BicyclicInfinityL1":
        return [
            (2 * n - 2, _composition((4, 1), (2, n - 1)), 6),
            (4 * n - 6, _composition((4, 1), (3, 1), (2, n - 3), (1, 1)), 6),
        ]
    if family == "BicyclicInfinityL2plus":
        return [
            (2 * n - 4, _composition((3, 2), (2, n - 2)), 7),
            (4 * n - 10, _composition((3, 3), (2, n - 4), (1, 1)), 7),
        ]
    if family == "BicyclicTheta":
        return [
            (2 * n - 4, _composition((3, 2), (2, n - 2)), 5),
            (4 * n - 10, _composition((3, 3), (2, n - 4), (1, 1)), 5),
        ]
    if family == "BicyclicAll":
        return [
            (2 * n - 4, _composition((3, 2), (2, n - 2)), 7),
            (2 * n - 2, _composition((4, 1), (2, n - 1)), 7),
            (4 * n - 10, _composition((3, 3), (2, n - 4), (1, 1)), 7),
        ]
    raise ValueError(f"no closed forms for family {family!r}")


def _build_report(
    family: str, n: int, ranks: list[RankedValue]
) -> VerificationReport:
    table = _expected_table(family, n)
    expected: list[ExpectedRank | None] = []
    verdict: list[str] = []
    for i, (value, seq, threshold) in enumerate(table):
        expected.append(None if seq is None else ExpectedRank(value, (seq,)))
        if n < threshold or seq is None:
            verdict.append("info")
            continue
        if i >= len(ranks):
            verdict.append("fail")
            continue
        actual = ranks[i]
        ok = actual.value == value and actual.sequences == (seq,)
        verdict.append("pass" if ok else "fail")
    return VerificationReport(
        family=family, n=n, ranked_minima=ranks, expected=expected, verdict=verdict
    )


def verify_trees(n_range: Iterable[int], threads: int = 1) -> list[VerificationReport]:
    """Ranked tree minima against the closed forms 2n-4, 4n-10, 6n-20."""
    return [
        _build_report("Tree", n, k_minimal("Tree", n, 3, threads=threads))
        for n in n_range
    ]


def verify_unicyclic(
    n_range: Iterable[int], threads: int = 1
) -> list[VerificationReport]:
    """Ranked unicyclic minima against the closed forms 0, 2n-2, 4n-8."""
    return [
        _build_report("Unicyclic", n, k_minimal("Unicyclic", n, 3, threads=threads))
        for n in n_range
    ]


def verify_bicyclic(
    n_range: Iterable[int], threads: int = 1
) -> list[VerificationReport]:
    """Ranked bicyclic minima: each core subclass and the whole family.

    A single enumeration pass per order feeds all four reports; the whole-
    family ranks are additionally cross-checked at sequence level.
    """
    reports = []
    subclass_of = {
        GraphKind.BICYCLIC_INFINITY_L1: "BicyclicInfinityL1",
        GraphKind.BICYCLIC_INFINITY_L2PLUS: "BicyclicInfinityL2plus",
        GraphKind.BICYCLIC_THETA: "BicyclicTheta",
    }
    for n in n_range:
        per_family: dict[str, dict[int, dict[tuple[int, ...], int]]] = {
            name: {} for name in (*subclass_of.values(), "BicyclicAll")
        }
        for g, cls in enumerate_bicyclic_by_class(n, threads=threads):
            value = total_irregularity(g)
            seq = degree_sequence(g)
            for name in (subclass_of[cls.kind], "BicyclicAll"):
                seqs = per_family[name].setdefault(value, {})
                seqs[seq] = seqs.get(seq, 0) + 1
        for name, by_value in per_family.items():
            kmax = len(_expected_table(name, n))
            ranks = [
                RankedValue(
                    value=value,
                    sequences=tuple(sorted(by_value[value], reverse=True)),
                    count=sum(by_value[value].values()),
                )
                for value in sorted(by_value)[:kmax]
            ]
            if name == "BicyclicAll":
                seq_ranks = k_minimal_sequence_level(name, n, kmax)
                if [(r.value, r.sequences) for r in ranks] != seq_ranks:
                    raise RuntimeError(
                        f"bicyclic graph/sequence minima disagree at n={n}"
                    )
            reports.append(_build_report(name, n, ranks))
    return reports


@dataclass
class BoundsReport:
    """Outcome of the global bound checks at one order.

    ``connected_checked`` graphs were tested against the cubic bound
    ``12*irr_t <= 2n^3 - 3n^2 - 2n + 3`` and, when not regular, against
    ``4*irr_t <= n^2*irr``; ``trees_checked`` trees were tested against
    ``irr_t <= (n-1)(n-2)`` (equality only for the star) and against
    ``irr_t <= (n-2)*irr`` for n >= 3.
    """

    n: int
    connected_checked: int
    trees_checked: int
    cubic_bound_failures: int
    ratio_bound_failures: int
    tree_max_bound_failures: int
    tree_ratio_failures: int
    star_is_unique_max: bool

    def all_pass(self) -> bool:
        return (
            self.cubic_bound_failures == 0
            and self.ratio_bound_failures == 0
            and self.tree_max_bound_failures == 0
            and self.tree_ratio_failures == 0
            and self.star_is_unique_max
        )


def verify_bounds(
    n_range: Iterable[int], include_connected: bool = True, threads: int = 1
) -> list[BoundsReport]:
    """Check the four global bounds over every enumerated graph.

    Tree bounds run for every requested order (n <= 12); the connected-
    family bounds need full enumeration and are limited to n <= 9 (set
    ``include_connected=False`` to check only the tree bounds).
    """
    reports = []
    for n in n_range:
        cubic_fail = ratio_fail = 0
        connected_checked = 0
        if include_connected:
            poly = 2 * n**3 - 3 * n**2 - 2 * n + 3
            for g in enumerate_connected(n, None, threads=threads):
                connected_checked += 1
                it = total_irregularity(g)
                if 12 * it > poly:
                    cubic_fail += 1
                if 4 * it > n * n * edge_irregularity(g):
                    ratio_fail += 1

        trees_checked = 0
        tree_max_fail = tree_ratio_fail = 0
        max_value = -1
        max_seqs: list[tuple[int, ...]] = []
        max_codes: list[CanonicalCode] = []
        for t in enumerate_trees(n, threads=threads):
            trees_checked += 1
            it = total_irregularity(t)
            if it > (n - 1) * (n - 2):
                tree_max_fail += 1
            if n >= 3 and it > (n - 2) * edge_irregularity(t):
                tree_ratio_fail += 1
            if it > max_value:
                max_value = it
                max_seqs = [degree_sequence(t)]
                max_codes = [canonical_form(t)]
            elif it == max_value:
                max_seqs.append(degree_sequence(t))
                max_codes.append(canonical_form(t))
        star_unique = (
            max_value == (n - 1) * (n - 2)
            and len(max_codes) == 1
            and max_codes[0] == canonical_form(Graph.star(n))
        )
        reports.append(
            BoundsReport(
                n=n,
                connected_checked=connected_checked,
                trees_checked=trees_checked,
                cubic_bound_failures=cubic_fail,
                ratio_bound_failures=ratio_fail,
                tree_max_bound_failures=tree_max_fail,
                tree_ratio_failures=tree_ratio_fail,
                star_is_unique_max=star_unique,
            )
        )
    return reports


@dataclass(frozen=True)
class Counterexample:
    """A non-regular connected graph (or realizable sequence) whose total
    irregularity falls below the conjectured bound ``2n - 4``."""

    n: int
    degree_sequence: tuple[int, ...]
    witness: Graph | None
    irr_t: int
    violated_bound: int


@dataclass(frozen=True)
class ConjectureEntry:
    n: int
    bound: int
    min_value: int | None
    min_sequences: tuple[tuple[int, ...], ...]


@dataclass
class ConjectureReport:
    mode: str
    entries: list[ConjectureEntry]
    counterexample: Counterexample | None


def _conjecture_graph_entry(n: int, threads: int) -> tuple[ConjectureEntry, Counterexample | None]:
    bound = 2 * n - 4
    best: int | None = None
    attain: set[tuple[int, ...]] = set()
    counter = None
    for g in enumerate_connected(n, None, threads=threads):
        degs = g.degrees
        if degs.count(degs[0]) == n:
            continue  # regular
        value = total_irregularity(g)
        if best is None or value < best:
            best = value
            attain = {degree_sequence(g)}
        elif value == best:
            attain.add(degree_sequence(g))
        if value < bound and counter is None:
            counter = Counterexample(
                n=n,
                degree_sequence=degree_sequence(g),
                witness=g,
                irr_t=value,
                violated_bound=bound,
            )
    entry = ConjectureEntry(
        n=n,
        bound=bound,
        min_value=best,
        min_sequences=tuple(sorted(attain, reverse=True)),
    )
    return entry, counter


def _conjecture_sequence_entry(n: int) -> tuple[ConjectureEntry, Counterexample | None]:
    """Branch-and-bound over non-increasing sequences with parts >= 1.

    For a prefix p of length k the total irregularity of any completion is
    at least ``pairs(p) + (n - k) * sum(p_i - p_k)``: the suffix entries are
    at most ``p_k``, so each contributes at least ``p_i - p_k`` against
    every prefix entry.  Subtrees with a lower bound above the best known
    value cannot contain new minima and are pruned; minima and violations
    are therefore found exactly, in lexicographically decreasing order.
    """
    from .sequences import has_connected_realization

    bound = 2 * n - 4
    best: int | None = None
    attain: set[tuple[int, ...]] = set()
    counter: Counterexample | None = None
    if n >= 3:
        seed = (2,) * (n - 2) + (1, 1)  # the path sequence, always present
        best = irr_t_of_sequence(seed)
        attain = {seed}

    prefix: list[int] = []
    min_sum = 2 * (n - 1)

    def rec(pos: int, total: int, cap: int, pairs: int, spread: int) -> None:
        nonlocal best, attain, counter
        # pairs: pairwise sum inside the prefix
        # spread: sum of (p_i - p_last) over the prefix
        slots = n - pos
        if slots == 0:
            if total % 2 or total < min_sum:
                return
            seq = tuple(prefix)
            if seq[0] == seq[-1]:
                return  # regular
            if not has_connected_realization(seq):
                return
            value = pairs
            if best is None or value < best:
                best = value
                attain = {seq}
            elif value == best:
                attain.add(seq)
            if value < bound and counter is None:
                counter = Counterexample(
                    n=n,
                    degree_sequence=seq,
                    witness=None,
                    irr_t=value,
                    violated_bound=bound,
                )
            return
        for val in range(cap, 0, -1):
            if total + val * slots < min_sum:
                break  # even the all-val completion is too sparse
            k = pos
            nspread = (spread + (prefix[-1] - val) * k) if k else 0
            npairs = pairs + nspread
            # lower bound for any completion below this prefix
            lower = npairs + (slots - 1) * nspread
            if best is not None and lower > best:
                continue
            prefix.append(val)
            rec(pos + 1, total + val, val, npairs, nspread)
            prefix.pop()

    rec(0, 0, n - 1, 0, 0)

    entry = ConjectureEntry(
        n=n,
        bound=bound,
        min_value=best,
        min_sequences=tuple(sorted(attain, reverse=True)),
    )
    return entry, counter


def check_conjecture(
    n_range: Iterable[int], mode: str = "sequence", threads: int = 1
) -> ConjectureReport:
    """Search for a non-regular connected counterexample to irr_t >= 2n-4.

    ``sequence`` mode scans connected-realizable degree sequences
    (n <= 16), ``graph`` mode scans all non-regular connected graphs
    (n <= 9).  The first violator in search order is reported; both modes
    also record the minimum non-regular value per order.
    """
    if mode not in ("sequence", "graph"):
        raise ValueError(f"mode must be 'sequence' or 'graph', got {mode!r}")
    entries = []
    counterexample = None
    for n in n_range:
        if mode == "graph":
            entry, counter = _conjecture_graph_entry(n, threads)
        else:
            if n > MAX_SEQUENCE_CONJECTURE_N:
                raise SizeLimitError(
                    f"sequence mode supports n <= {MAX_SEQUENCE_CONJECTURE_N}"
                )
            entry, counter = _conjecture_sequence_entry(n)
        entries.append(entry)
        if counter is not None and counterexample is None:
            counterexample = counter
    return ConjectureReport(mode=mode, entries=entries, counterexample=counterexample)
