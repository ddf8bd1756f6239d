"""Exception types raised across the pipeline."""


class StackmineError(Exception):
    """Base class for all stackmine errors."""


class UnsupportedLanguage(StackmineError):
    pass


class StaleSite(StackmineError):
    """Source bytes at a mutation span no longer match what was enumerated."""


class MalformedRow(StackmineError):
    def __init__(self, line_number: int, message: str):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class BaselineFailed(StackmineError):
    """Pristine build or test run failed; campaign cannot calibrate."""


class EmptyPlan(StackmineError):
    pass


class WorkspaceDirty(StackmineError):
    """Workspace differs from pristine before a step was applied."""


class RevertFailed(StackmineError):
    """Workspace could not be restored to pristine; campaign must halt."""


class CorruptJournal(StackmineError):
    def __init__(self, line_number: int, message: str):
        super().__init__(f"journal line {line_number}: {message}")
        self.line_number = line_number


class NoFramesFound(StackmineError):
    pass


class BudgetTooSmall(StackmineError):
    pass


class NotDeduplicated(StackmineError):
    pass


class EmptyDataset(StackmineError):
    pass


class EmptyBatch(StackmineError):
    pass


class MissingFilePart(StackmineError):
    pass


class EmptyTrainSet(StackmineError):
    pass


class UnknownSampleId(StackmineError):
    pass
