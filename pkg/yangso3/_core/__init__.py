from yangso3._core.create import create_engine
from yangso3._core.engine import VerificationEngine

__all__ = ["VerificationEngine", "create_engine"]
