"""Involutions, Brouwer complements and the taxonomy built on them.

The chain of notions checked here, weakest first: involution lattice,
bounded involution lattice, pseudo-Kleene algebra (condition (k)),
paraorthomodular, BZ-lattice, PBZ*-lattice, antiortholattice.  Every
predicate is exhaustive and reports the first failing witness in
lexicographic order.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InputError, MissingBrouwer, NotBrouwer, NotInvolutive, NotOrderReversing
from .lattice import FiniteLattice, bits, dual, is_distributive, isomorphisms


@dataclass(frozen=True)
class InvolutionStructure:
    """A lattice with an involution ``inv`` and optionally a Brouwer map."""

    lattice: FiniteLattice
    inv: tuple
    brouwer: tuple | None = None

    @property
    def n(self) -> int:
        return self.lattice.n

    def with_brouwer(self, brouwer) -> "InvolutionStructure":
        return validate_involution(self.lattice, self.inv, brouwer)

    def without_brouwer(self) -> "InvolutionStructure":
        return InvolutionStructure(self.lattice, self.inv)


@dataclass(frozen=True)
class Verdict:
    """Outcome of an exhaustive check; falsy when the property fails."""

    holds: bool
    witness: tuple | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.holds


PASS = Verdict(True)


def lattice_of(S) -> FiniteLattice:
    return S.lattice if isinstance(S, InvolutionStructure) else S


def _as_map(L: FiniteLattice, f, what: str) -> tuple:
    f = tuple(int(v) for v in f)
    if len(f) != L.n or any(not 0 <= v < L.n for v in f):
        raise InputError(f"{what} must map each of the {L.n} elements into the universe")
    return f


def _order_reversal_witness(L: FiniteLattice, f):
    for x in range(L.n):
        for y in bits(L.up[x]):
            if not L.leq(f[y], f[x]):
                return (x, y)
    return None


def brouwer_witness(L: FiniteLattice, inv, br):
    """First failed Brouwer axiom as ``(axiom, witness)`` or None."""
    w = _order_reversal_witness(L, br)
    if w is not None:
        return ("order-reversing", w)
    for x in range(L.n):
        if L.meet[x][br[x]] != L.bottom:
            return ("x meet x~ = 0", (x,))
    for x in range(L.n):
        if not L.leq(x, br[br[x]]):
            return ("x <= x~~", (x,))
    for x in range(L.n):
        if br[br[x]] != inv[br[x]]:
            return ("x~~ = x~'", (x,))
    return None


def validate_involution(L: FiniteLattice, inv, brouwer=None) -> InvolutionStructure:
    """Check ``inv`` (and ``brouwer`` if given) and wrap them with ``L``."""
    inv = _as_map(L, inv, "involution")
    for x in range(L.n):
        if inv[inv[x]] != x:
            raise NotInvolutive(x)
    w = _order_reversal_witness(L, inv)
    if w is not None:
        raise NotOrderReversing(*w)
    if brouwer is not None:
        brouwer = _as_map(L, brouwer, "Brouwer complement")
        bad = brouwer_witness(L, inv, brouwer)
        if bad is not None:
            raise NotBrouwer(*bad)
    return InvolutionStructure(L, inv, brouwer)


def reversal(n: int) -> tuple:
    """The order-reversing involution of the chain ``0 < 1 < ... < n-1``."""
    return tuple(range(n - 1, -1, -1))


def find_involutions(L: FiniteLattice):
    """Yield every order-reversing involution of ``L`` (lexicographic)."""
    for f in isomorphisms(L, dual(L)):
        if all(f[f[x]] == x for x in range(L.n)):
            yield f


def is_pseudo_kleene(S: InvolutionStructure) -> Verdict:
    """Condition (k): a ∧ a' <= b ∨ b' for all a, b."""
    L, inv = S.lattice, S.inv
    for a in range(L.n):
        low = L.meet[a][inv[a]]
        for b in range(L.n):
            if not L.leq(low, L.join[b][inv[b]]):
                return Verdict(False, (a, b), "(k)")
    return PASS


def is_paraorthomodular(S: InvolutionStructure) -> Verdict:
    """a <= b and a' ∧ b = 0 imply a = b."""
    L, inv = S.lattice, S.inv
    for a in range(L.n):
        for b in bits(L.up[a]):
            if b != a and L.meet[inv[a]][b] == L.bottom:
                return Verdict(False, (a, b), "paraorthomodular")
    return PASS


def trivial_brouwer(L: FiniteLattice) -> tuple:
    """0 goes to 1 and every other element to 0."""
    return tuple(L.top if x == L.bottom else L.bottom for x in range(L.n))


def with_trivial_brouwer(S: InvolutionStructure) -> InvolutionStructure:
    return S.with_brouwer(trivial_brouwer(S.lattice))


def _require_brouwer(S):
    if not isinstance(S, InvolutionStructure) or S.brouwer is None:
        raise MissingBrouwer("structure has no Brouwer complement")


def is_bz(S: InvolutionStructure) -> Verdict:
    _require_brouwer(S)
    bad = brouwer_witness(S.lattice, S.inv, S.brouwer)
    if bad is not None:
        return Verdict(False, bad[1], bad[0])
    return is_pseudo_kleene(S)


def is_pbz_star(S: InvolutionStructure) -> Verdict:
    """BZ, paraorthomodular, and (a ∧ a')~ = a~ ∨ a'~ for every a."""
    _require_brouwer(S)
    for check in (is_bz, is_paraorthomodular):
        v = check(S)
        if not v:
            return v
    L, inv, br = S.lattice, S.inv, S.brouwer
    for a in range(L.n):
        if br[L.meet[a][inv[a]]] != L.join[br[a]][br[inv[a]]]:
            return Verdict(False, (a,), "pbz*-identity")
    return PASS


def is_antiortholattice(S: InvolutionStructure) -> Verdict:
    """PBZ* and no element besides 0, 1 has its involute as a lattice complement."""
    v = is_pbz_star(S)
    if not v:
        return v
    L, inv = S.lattice, S.inv
    for x in range(L.n):
        if x in (L.bottom, L.top):
            continue
        if L.join[x][inv[x]] == L.top and L.meet[x][inv[x]] == L.bottom:
            return Verdict(False, (x,), "complemented")
    return PASS


FLAG_ORDER = (
    "i-lattice",
    "bounded",
    "pseudo-Kleene",
    "De Morgan",
    "Kleene",
    "paraorthomodular",
    "BZ",
    "PBZ*",
    "antiortholattice",
)


@dataclass
class TaxonomyReport:
    flags: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)

    def __getitem__(self, name):
        return self.flags[name]

    def lines(self):
        out = []
        for name in FLAG_ORDER:
            mark = "yes" if self.flags[name] else "no"
            w = self.witnesses.get(name)
            out.append(f"{name}: {mark}" + (f" (witness {w})" if w is not None else ""))
        return out


def classify(S) -> TaxonomyReport:
    """Evaluate the whole taxonomy on a lattice or involution structure."""
    rep = TaxonomyReport()
    flags, wit = rep.flags, rep.witnesses
    flags["bounded"] = True
    if not isinstance(S, InvolutionStructure):
        for name in FLAG_ORDER:
            if name != "bounded":
                flags[name] = False
                wit[name] = "no involution"
        return rep
    flags["i-lattice"] = True
    distributive = is_distributive(S.lattice)
    flags["De Morgan"] = distributive
    pk = is_pseudo_kleene(S)
    flags["pseudo-Kleene"] = pk.holds
    flags["Kleene"] = distributive and pk.holds
    if not distributive:
        wit["De Morgan"] = wit["Kleene"] = "not distributive"
    if not pk:
        wit["pseudo-Kleene"] = pk.witness
        wit.setdefault("Kleene", pk.witness)
    pom = is_paraorthomodular(S)
    flags["paraorthomodular"] = pom.holds
    if not pom:
        wit["paraorthomodular"] = pom.witness
    if S.brouwer is None:
        for name in ("BZ", "PBZ*", "antiortholattice"):
            flags[name] = False
            wit[name] = "no Brouwer complement"
        return rep
    for name, check in (("BZ", is_bz), ("PBZ*", is_pbz_star),
                        ("antiortholattice", is_antiortholattice)):
        v = check(S)
        flags[name] = v.holds
        if not v:
            wit[name] = (v.reason,) + tuple(v.witness or ())
    return rep
