"""Exception hierarchy.

Input errors describe documents that fail the polytope contract and map to
CLI exit code 2; precondition errors describe valid polytopes fed to an
operation whose hypotheses they violate and map to exit code 3.
"""


class PolytopeError(Exception):
    """Base class for all library errors."""


class InputError(PolytopeError):
    """A document or half-space list violates the input contract."""


class MalformedRational(InputError):
    def __init__(self, value):
        super().__init__(f"not a rational: {value!r}")
        self.value = value


class Unbounded(InputError):
    def __init__(self, direction=None):
        msg = "half-space intersection is unbounded"
        if direction is not None:
            msg += f" (recession direction {direction})"
        super().__init__(msg)
        self.direction = direction


class NotFullDimensional(InputError):
    def __init__(self, detail=""):
        super().__init__("polytope is not full-dimensional" + (f": {detail}" if detail else ""))


class NotSimple(InputError):
    def __init__(self, vertex, tight):
        super().__init__(f"vertex {vertex} lies on {len(tight)} facets (tight set {sorted(tight)})")
        self.vertex = vertex
        self.tight = tight


class RedundantHalfSpace(InputError):
    def __init__(self, index):
        super().__init__(f"half-space #{index} is redundant")
        self.index = index


class PreconditionError(PolytopeError):
    """An operation's hypothesis fails on otherwise valid input."""


class GenericityFailure(PreconditionError):
    def __init__(self, vertex, edge):
        super().__init__(f"polarizing vector pairs to zero with edge {edge} at vertex {vertex}")
        self.vertex = vertex
        self.edge = edge


class AssumptionViolated(PreconditionError):
    def __init__(self, faces):
        names = ", ".join(str(list(f)) for f in faces)
        super().__init__(f"center projection leaves the relative interior on face(s) {names}")
        self.faces = tuple(faces)


class DegeneratePairing(PreconditionError):
    def __init__(self, face, generator):
        super().__init__(f"zero pairing with quotient generator {generator} on face {list(face)}")
        self.face = face
        self.generator = generator
