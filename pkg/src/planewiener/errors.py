"""Exception hierarchy for plane-graph construction, families and codecs."""


class PlaneWienerError(Exception):
    """Base class for all library errors."""


class AsymmetricDarts(PlaneWienerError):
    """Some vertex u lists v more often than v lists u."""


class Disconnected(PlaneWienerError):
    """The underlying graph is not connected."""


class NonPlanarEmbedding(PlaneWienerError):
    """Face tracing does not satisfy Euler's formula (genus != 0)."""


class LoopEdge(PlaneWienerError):
    """A vertex lists itself; loops are not representable."""


class UnknownVertex(PlaneWienerError):
    """Vertex id outside 1..n."""


class OrderOutOfDomain(PlaneWienerError):
    """Requested order violates a family's parity/residue/minimum constraints."""


class BadGadgetParameter(PlaneWienerError):
    """Gadget parameter outside its admissible range."""


class SecondUndefined(PlaneWienerError):
    """The second-best layer sequence does not exist (tail entry is 1)."""


class HypothesisNotMet(PlaneWienerError):
    """A structural audit was requested for a graph outside the lemma's class."""


class OrderTooLarge(PlaneWienerError):
    """planar_code narrow format supports at most 255 vertices."""


class TruncatedStream(PlaneWienerError):
    """A planar_code byte stream ended in the middle of a graph."""


class BadHeader(PlaneWienerError):
    """A planar_code header is present but malformed."""


class InvalidNeighborByte(PlaneWienerError):
    """A planar_code neighbor byte is outside 1..n."""
