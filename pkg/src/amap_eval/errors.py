"""Exception types shared across the toolkit."""


class InvalidGeometryError(ValueError):
    """Raised when a polyline violates its structural invariants."""


class SchemaError(ValueError):
    """A dataset / config / manifest file violates its schema.

    Carries a JSON-pointer-style ``pointer`` locating the offending element.
    """

    def __init__(self, message: str, pointer: str = ""):
        self.pointer = pointer
        super().__init__(f"{message} (at {pointer or '/'})")


class FrameSetMismatchError(ValueError):
    """Prediction and ground-truth files do not cover the same frames."""

    def __init__(self, missing_in_pred, missing_in_gt):
        self.missing_in_pred = sorted(missing_in_pred)
        self.missing_in_gt = sorted(missing_in_gt)
        parts = []
        if self.missing_in_pred:
            parts.append(f"frames missing from predictions: {', '.join(self.missing_in_pred)}")
        if self.missing_in_gt:
            parts.append(f"frames missing from ground truth: {', '.join(self.missing_in_gt)}")
        super().__init__("; ".join(parts) or "frame sets differ")
