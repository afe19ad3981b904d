"""Exception hierarchy. Every domain error carries a stable ``code`` used by the CLI."""


class CombintError(Exception):
    code = "error"

    def __init__(self, detail=""):
        super().__init__(detail)
        self.detail = detail


class DuplicateId(CombintError):
    code = "duplicate_id"


class DanglingEndpoint(CombintError):
    code = "dangling_endpoint"


class Disconnected(CombintError):
    code = "disconnected"


class NotComposable(CombintError):
    code = "not_composable"


class UnknownEdge(CombintError):
    code = "unknown_edge"


class NotAUnit(CombintError):
    code = "not_a_unit"


class ZeroArgument(CombintError):
    code = "zero_argument"


class PrimeMismatch(CombintError):
    code = "prime_mismatch"


class NotHarmonic(CombintError):
    code = "not_harmonic"


class HalfOpenEdgeInChain(CombintError):
    code = "half_open_edge_in_chain"


class NotHarmonicAfterPullback(CombintError):
    code = "not_harmonic_after_pullback"


class InvalidEmbedding(CombintError):
    code = "invalid_embedding"


class NotABasis(CombintError):
    code = "not_a_basis"


class AlphabetMismatch(CombintError):
    code = "alphabet_mismatch"


class LevelMismatch(CombintError):
    code = "level_mismatch"


class NonUnitAugmentation(CombintError):
    code = "non_unit_augmentation"


class ShapeMismatch(CombintError):
    code = "shape_mismatch"


class NonProperCore(CombintError):
    code = "non_proper_core"


class UnknownGenerator(CombintError):
    code = "unknown_generator"


class DegreeCapExceeded(CombintError):
    code = "degree_cap_exceeded"


class NotGrouplike(CombintError):
    code = "not_grouplike"


class ZeroPoint(CombintError):
    code = "zero_point"


class InvalidSpec(CombintError):
    code = "invalid_spec"
