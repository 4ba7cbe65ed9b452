"""Exception types shared across the pipeline."""


class InputError(Exception):
    """Base for malformed user-supplied input (CLI exit code 2)."""


class MalformedLexiconLine(InputError):
    def __init__(self, line_no, line=""):
        self.line_no = line_no
        super().__init__(f"lexicon line {line_no}: expected WORD PH1 [PH2 ...], got {line!r}")


class MalformedLabelLine(InputError):
    def __init__(self, line_no, line=""):
        self.line_no = line_no
        super().__init__(f"label line {line_no}: expected start<TAB>end<TAB>label, got {line!r}")


class NegativeDuration(InputError):
    def __init__(self, line_no):
        self.line_no = line_no
        super().__init__(f"label line {line_no}: end time before start time")


class UnmappedLabel(InputError):
    def __init__(self, raw_label):
        self.raw_label = raw_label
        super().__init__(f"no error-class keyword matches label {raw_label!r}")


class ZeroReference(InputError):
    pass


class CountExceedsTotal(InputError):
    pass


class ZeroVariance(ValueError):
    """A correlation input vector is constant."""


class LengthMismatch(ValueError):
    pass


class UnparseableExactError(InputError):
    def __init__(self, raw):
        self.raw = raw
        super().__init__(f"no target token extractable from exact-error text {raw!r}")


class EmptyRun(ValueError):
    pass


class IndexOutOfRange(ValueError):
    pass
