"""Exception hierarchy shared by all orderlab modules."""


class OrderlabError(Exception):
    """Base class for all orderlab errors."""


class WordSyntaxError(OrderlabError):
    """Malformed word text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class IdentityInput(OrderlabError):
    """An operation that needs a nontrivial word received the identity."""


class EmptyRelator(OrderlabError):
    """The relator freely reduces to the identity."""


class DegenerateRelator(OrderlabError):
    """After normalization the relator involves only one generator."""


class NotInN(OrderlabError):
    """The word has nonzero t-exponent sum, so it lies outside the x-normal-closure."""


class InDerivedSubgroup(OrderlabError):
    """All degree sums vanish; the associated polynomial is undefined."""


class NotPrincipal(OrderlabError):
    """No orientation-orbit member is principal."""


class DegreeZero(OrderlabError):
    """The principal form is constant (degree span zero)."""


class ZeroPolynomial(OrderlabError):
    """The zero polynomial was passed where a nonzero one is required."""


class ZeroAtOrigin(OrderlabError):
    """The polynomial vanishes at 0, which the root predicates forbid."""


class BadWeights(OrderlabError):
    """Weight vector is too short or has zero top entry."""


class BadOrder(OrderlabError):
    """Minor order outside the matrix dimensions."""


class EmptyLhs(OrderlabError):
    """A certificate must contain at least one conjugate factor."""


class BoundsTooLarge(OrderlabError):
    """The certificate search space exceeds the configured budget."""


class InternalInconsistency(OrderlabError):
    """Both a positive and a negative rule fired; indicates a bug, raised loudly."""
