from yangso3._core.engine._engine import VerificationEngine

__all__ = ["VerificationEngine"]
