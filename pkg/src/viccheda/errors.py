"""Exception types shared across the engine."""


class VicchedaError(Exception):
    """Base class for all engine errors."""


class InvalidPhoneme(VicchedaError):
    def __init__(self, position: int, char: str):
        self.position = position
        self.char = char
        super().__init__(f"invalid phoneme {char!r} at position {position}")


class MalformedRow(VicchedaError):
    def __init__(self, path, line_no: int, reason: str):
        self.path = path
        self.line_no = line_no
        self.reason = reason
        super().__init__(f"{path}:{line_no}: {reason}")


class DuplicateRule(VicchedaError):
    def __init__(self, rule_id: str):
        self.rule_id = rule_id
        super().__init__(f"duplicate rule id {rule_id!r}")


class ConflictingRule(VicchedaError):
    def __init__(self, u: str, v: str, context: str):
        self.u = u
        self.v = v
        self.context = context
        super().__init__(f"conflicting rule for ({u!r}, {v!r}, {context})")


class UnknownPhase(VicchedaError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"unknown phase {name!r}")


class NoAcceptPath(VicchedaError):
    pass


class NegativeCount(VicchedaError):
    def __init__(self, token: str, count: int):
        self.token = token
        self.count = count
        super().__init__(f"negative count {count} for {token!r}")


class RuleMismatch(VicchedaError):
    pass


class DifferentCorpora(VicchedaError):
    pass


class EmptyInput(VicchedaError):
    pass
