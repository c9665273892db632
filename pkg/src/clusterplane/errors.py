"""Exception types shared across the package."""


class ClusterplaneError(Exception):
    """Base class for all package-specific errors."""


class NotSimple(ClusterplaneError):
    """Loop, repeated neighbor, or malformed adjacency in a rotation system."""


class AsymmetricRotation(ClusterplaneError):
    """u lists v as a neighbor but not vice versa."""


class NotSphereEmbedding(ClusterplaneError):
    """Face tracing contradicts Euler's formula for some component."""


class BadOuterFace(ClusterplaneError):
    """Outer-face hint does not match any boundary walk."""


class MissingOuterFace(ClusterplaneError):
    """Operation needs a designated outer face but the graph has none."""


class NotATriangle(ClusterplaneError):
    """The given vertices are not three pairwise adjacent distinct vertices."""


class TriangleOnOuterFace(ClusterplaneError):
    """Disk side of a triangle is ambiguous and no side was designated."""


class BudgetExceeded(ClusterplaneError):
    """An exhaustive search ran out of its node budget."""


class SearchBudgetExceeded(BudgetExceeded):
    """Subgraph search ran out of budget; the instance is unverified."""


class IslandNotFound(ClusterplaneError):
    """No island within the configured size cap; escalation exhausted."""


class ListTooSmall(ClusterplaneError):
    """A color list is smaller than required."""


class NoValidExtension(ClusterplaneError):
    """Exhaustive sparsifier extension found no valid assignment (a bug:
    existence is guaranteed for valid inputs)."""


class NotSeparated(ClusterplaneError):
    """Sparsifier system is not pairwise separated."""


class HypothesesViolated(ClusterplaneError):
    """A stage's structural precondition fails on the actual input."""


class NotA3Tree(ClusterplaneError):
    """Graph is not a rooted planar 3-tree over the given root triangle."""


class PwordPresent(ClusterplaneError):
    """A forbidden apex-path subgraph was found where none may exist."""


class AllIncidentVerticesPrecolored(ClusterplaneError):
    """A face in a pointer-system domain has only precolored vertices."""


class OuterNotTriangle(ClusterplaneError):
    """The outer face of the input is not bounded by a triangle."""


class PrecoloringIncomplete(ClusterplaneError):
    """The outer triangle is not fully contained in the precolored set."""


class UnsupportedStructure(ClusterplaneError):
    """Graph shape outside what the exact decision procedure supports."""
