"""Exception hierarchy shared by every lattica module."""


class LatticaError(Exception):
    """Base class for all errors raised by lattica."""


class InputError(LatticaError, ValueError):
    """Malformed input: bad documents, bad maps, out-of-range elements."""


class CyclicOrder(InputError):
    def __init__(self, element):
        super().__init__(f"cover relation has a cycle through element {element}")
        self.element = element


class NotALattice(InputError):
    def __init__(self, pair, minimal_upper_bounds, kind="upper"):
        self.pair = tuple(pair)
        self.bounds = tuple(minimal_upper_bounds)
        self.kind = kind
        super().__init__(
            f"pair {self.pair} has minimal {kind} bounds {list(self.bounds)}, "
            f"expected exactly one"
        )


class Unbounded(InputError):
    def __init__(self, which, candidates):
        self.which = which
        self.candidates = tuple(candidates)
        super().__init__(f"no unique {which}: candidates {list(self.candidates)}")


class NotInvolutive(InputError):
    def __init__(self, x):
        super().__init__(f"map is not involutive at {x}")
        self.x = x


class NotOrderReversing(InputError):
    def __init__(self, x, y):
        super().__init__(f"{x} <= {y} but the image of {y} is not below the image of {x}")
        self.pair = (x, y)


class NotBrouwer(InputError):
    def __init__(self, axiom, witness):
        super().__init__(f"Brouwer complement axiom {axiom!r} fails at {witness}")
        self.axiom = axiom
        self.witness = witness


class MissingBrouwer(LatticaError):
    pass


class SignatureMismatch(InputError):
    pass


class TooLarge(LatticaError):
    def __init__(self, n, limit):
        super().__init__(f"{n} elements exceeds the oracle limit {limit}")
        self.n = n
        self.limit = limit


class NotSubalgebra(LatticaError):
    def __init__(self, witness):
        super().__init__(f"subset is not closed: {witness}")
        self.witness = witness


class NotACongruence(LatticaError):
    pass


class ConstructionError(InputError):
    """Domain violation in a construction (bad size, missing involution...)."""


class TrivialSummand(ConstructionError):
    pass


class TrivialSeed(ConstructionError):
    pass


class NotPseudoKleene(ConstructionError):
    def __init__(self, witness):
        super().__init__(f"condition (k) fails at {witness}")
        self.witness = witness


class ConditionSViolated(LatticaError):
    def __init__(self, witness):
        super().__init__(f"subalgebra condition fails: {witness}")
        self.witness = witness
