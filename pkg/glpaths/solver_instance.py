from collections import OrderedDict
from glpaths import cc
from glpaths import exceptions


class SolverInstance(object):
    """
    Run configuration and bookkeeping shared by one top-level solve call

    Parameters
    ----------
    enum_limit: int
        test_two_labels enumerates every s-t path once the contracted graph has at most this many vertices
        (must be at least 6).
    check_invariants: bool
        If True, the recursion bookkeeping and witness validity are asserted at every split.
    state: int
        0 = silent, 1 = record a readable trace of every step in `commands`.
    """
    n_recursions = 0
    n_two_contractions = 0
    n_three_contractions = 0
    n_enumerations = 0
    n_d0_checks = 0

    def __init__(self, enum_limit=cc.ENUM_LIMIT, check_invariants=True, state=0):
        if enum_limit < cc.ENUM_LIMIT:
            raise ValueError(f'enum_limit must be at least {cc.ENUM_LIMIT}, not {enum_limit}')
        self.enum_limit = int(enum_limit)
        self.check_invariants = bool(check_invariants)
        self._state = state  # 0=silent, 1=record trace
        self.commands = []

    def to_commands(self, line, depth=0):
        if self._state == 1:
            self.commands.append('  ' * depth + line)

    def to_dict(self):
        outputs = OrderedDict()
        outputs['enum_limit'] = self.enum_limit
        outputs['n_recursions'] = self.n_recursions
        outputs['n_two_contractions'] = self.n_two_contractions
        outputs['n_three_contractions'] = self.n_three_contractions
        outputs['n_enumerations'] = self.n_enumerations
        outputs['n_d0_checks'] = self.n_d0_checks
        return outputs

    def assert_invariant(self, condition, message):
        if self.check_invariants and not condition:
            raise exceptions.PreconditionError(message)

    @property
    def state(self):
        return self._state

    @state.setter
    def state(self, value):
        self._state = value
