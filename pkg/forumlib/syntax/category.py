"""Definition of the syntactic categories of terms and formulae."""

# A variable occurrence.
VAR = 'VAR'

# A function symbol applied to terms (constants have no arguments).
APP = 'APP'

# A predicate symbol applied to terms.
ATOM = 'ATOM'

# Multiplicative unit.
ONE = 'ONE'

# Multiplicative false.
BOT = 'BOT'

# Additive true.
TOP = 'TOP'

# Additive false.
ZERO = 'ZERO'

# Multiplicative conjunction.
TENSOR = 'TENSOR'

# Multiplicative disjunction.
PAR = 'PAR'

# Additive conjunction.
AMP = 'AMP'

# Additive disjunction.
PLUS = 'PLUS'

# Linear implication.
LOLLI = 'LOLLI'

# Intuitionistic implication, F => F' stands for !F -o F'.
IMPLIES = 'IMPLIES'

# Of course modality.
BANG = 'BANG'

# Why not modality.
WHYNOT = 'WHYNOT'

# Linear negation.
DUAL = 'DUAL'

# Universal quantifier.
FORALL = 'FORALL'

# Existential quantifier.
EXISTS = 'EXISTS'

# A goal of the Forum fragment.
GOAL = 'GOAL'

# A clause of the Forum fragment.
CLAUSE = 'CLAUSE'

# variable roles
BOUND = 'bound'
EIGEN = 'eigen'
META = 'meta'

variable_roles = {BOUND, EIGEN, META}

constants = {ONE, BOT, TOP, ZERO}
binary = {TENSOR, PAR, AMP, PLUS, LOLLI, IMPLIES}
unary = {BANG, WHYNOT, DUAL}
quantifiers = {FORALL, EXISTS}

# connectives allowed in the Forum fragment
forum = {ATOM, BOT, TOP, PAR, AMP, LOLLI, IMPLIES, FORALL}
