"""Exception types shared across the library."""


class CurvetopError(Exception):
    """Base class for all library-specific failures."""


class ParseError(CurvetopError):
    def __init__(self, message, pos=None):
        self.pos = pos
        if pos is not None:
            message = f"{message} (at position {pos})"
        super().__init__(message)


class NotSquarefree(CurvetopError):
    """Input polynomial has a repeated factor where a squarefree one is required."""


class DegreeOrder(CurvetopError):
    """deg(P) < deg(Q) in a context that requires deg(P) >= deg(Q)."""


class DegreeMismatch(CurvetopError):
    """Polynomial degree does not match the requested extraction routine."""


class ZeroEntry(CurvetopError):
    """A sign list that must be zero-free contains a zero."""


class NoMultipleRoot(CurvetopError):
    """Multiple-root extraction was requested for a squarefree polynomial."""


class UnsupportedPattern(CurvetopError):
    """Multiplicity pattern outside the closed-form theorem's hypotheses.

    Carries enough context for the caller to decide on a remedy (shear,
    or plain isolation of the tau-chain).
    """

    def __init__(self, degree, pattern, tau_degrees, message=None):
        self.degree = degree
        self.pattern = pattern          # {multiplicity: (real_count, complex_pair_count)}
        self.tau_degrees = tau_degrees  # degrees of tau_0, tau_1, ...
        if message is None:
            shape = ", ".join(
                f"m={m}: {r} real / {c} complex" for m, (r, c) in sorted(pattern.items())
            )
            message = f"degree-{degree} multiplicity pattern not supported ({shape})"
        super().__init__(message)


class DegenerateDirection(CurvetopError):
    """All pure y-derivatives vanish at a point (vertical line component)."""


class AmbiguousAssignment(CurvetopError):
    """Half-branch assignment rules were inconclusive for a critical fiber."""


class ZeroDiscriminant(CurvetopError):
    """Resultant of P and P_y vanishes identically: P is not squarefree in y."""


class RetriesExhausted(CurvetopError):
    """All shear retries failed to produce an analysable curve."""

    def __init__(self, attempts, last_failure):
        self.attempts = attempts
        self.last_failure = last_failure
        super().__init__(
            f"topology computation failed after {attempts} shear attempts: {last_failure}"
        )


class NotAnEllipsoid(CurvetopError):
    """Quadric matrix does not define a real ellipsoid."""
