"""
Component seed derivation from one root seed.
"""
import hashlib

SPLIT = "split"
AUTOASSOCIATIVE = "autoassociative"
IMPUTATION = "imputation"
DECISION = "decision"


def derive_seed(root: int, component: str) -> int:
    """
    Unsigned 64-bit seed for a named component.

    First 8 bytes (big-endian) of SHA-256 over "<root>:<component>".
    """
    digest = hashlib.sha256(f"{root}:{component}".encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big")
