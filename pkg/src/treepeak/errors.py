"""Exception types.

Every error carries a short machine-readable ``code`` (used by the CLI in the
``error: <code>: <message>`` line) and the process exit status it maps to.
"""


class TreepeakError(Exception):
    code = "error"
    exit_status = 2


class MalformedInput(TreepeakError):
    code = "malformed-input"


class NotAPermutation(MalformedInput):
    code = "not-a-permutation"


class EmptyProfile(MalformedInput):
    code = "empty-profile"


class IndexOutOfRange(TreepeakError, IndexError):
    code = "index-out-of-range"


class EmptySubset(TreepeakError, ValueError):
    code = "empty-subset"


class CandidateNotInSubset(TreepeakError, ValueError):
    code = "candidate-not-in-subset"


class InvalidScoring(TreepeakError, ValueError):
    code = "invalid-scoring"


class ScoreOverflow(TreepeakError, OverflowError):
    code = "score-overflow"


class InvalidTree(TreepeakError, ValueError):
    code = "invalid-tree"


class SizeMismatch(TreepeakError, ValueError):
    code = "size-mismatch"


class InvalidDecomposition(TreepeakError, ValueError):
    code = "invalid-decomposition"


class NegativeCapacity(TreepeakError, ValueError):
    code = "negative-capacity"


class IllegalAttachment(TreepeakError, ValueError):
    code = "illegal-attachment"


class NotFree(TreepeakError, ValueError):
    code = "not-free"


class InvalidK(TreepeakError, ValueError):
    code = "invalid-k"


class NotSinglePeakedOnTree(TreepeakError, ValueError):
    code = "not-single-peaked"


class WrongScoringShape(TreepeakError, ValueError):
    code = "wrong-scoring-shape"


class TooLarge(TreepeakError):
    code = "too-large"
    exit_status = 3


class TooManyLeaves(TooLarge):
    code = "too-many-leaves"


class TooManyInternal(TooLarge):
    code = "too-many-internal"
