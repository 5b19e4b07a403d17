"""Star-transposition Gray codes for (n+1, n+1)-combinations with a block-structured flip sequence."""

from .generator import Generator, generate
from .verifier import Certificate, certify_blocks, certify_hamilton, lemma_suite

__all__ = ["Generator", "generate", "Certificate", "certify_blocks", "certify_hamilton", "lemma_suite"]
__version__ = "0.1.0"
