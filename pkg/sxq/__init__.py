
__version__ = '0.1.0'

from .core import (Pattern, Variable, MatchFailure, UnboundVariableError,
                   test, any_, fail, eq, is_instance_of, variable, conj, disj,
                   traced, test_then, otherwise, ensure)
from .motifs import (Motif, transform, transform_partial, for_instances_of,
                     identity, star, star_bounded, plus)
from .values import (Symbol, Number, String, Boolean, Pair, EMPTY, sym, num,
                     make_list, to_list, is_proper_list)
from .reader import ReadError, SourcePosition, read, write
from .query import QueryError, parse_query, compile_query, collect_bindings
