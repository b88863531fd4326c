# Modulo Harness - generadores deterministas, oraculo clasico y suites de teoremas
from .models import GenConfig, InstanceResult, SuiteReport
from .generators import gen_l_ordered_set, gen_l_dcpo, gen_interpolative_space, gen_approx_relation, ROUTES
from .oracle import classical_oracle, ORACULOS
from .suites import run_suite, SUITES
