"""Discrete-time Markov model of a superscalar issue queue and its functional units."""

from .distributions import Poisson, Tabulated, binomial_pmf, poisson_pmf
from .multi_type import (ModelConfig, joint_arrival_matrix, joint_consumption_matrix,
                         multinomial_coefficient, type_probability)
from .optimizer import FuCostParams, configuration_cost, grid_search, hill_climb
from .oracle_sim import SimConfig, run, step, tv_distance
from .single_type import (SingleTypeParams, TransitionMatrix, arrival_matrix_1d,
                          consumption_matrix_1d)
from .solver import complete_matrix, metrics, solve_model, steady_state
from .state_space import StateSpace, enumerate_states, is_boundary, state_space_size

__version__ = "0.1.0"
