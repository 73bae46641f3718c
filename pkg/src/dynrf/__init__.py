"""Monte Carlo evaluation of dynamic RF combining for ambient energy harvesting."""

from .channel import ChannelMatrix, draw_channel, draw_channel_matrix, pathloss, rician_factor, steering_vector
from .codebook import StageDecomposition, binary_stage_decomposition, bits_for, dft_codebook, uniform_grid
from .combiner import (LossProfile, PhaseConfig, energy_over, harvested_power, insertion_loss_vector)
from .geometry import Deployment, TransmitterSite, draw_deployment
from .montecarlo import (AggregateRow, SweepSpec, crossover_density, derive_trial_seed, run_trial,
                         sweep_antennas, sweep_density)
from .params import SimParams, db_to_linear, linear_to_db
from .schemes import (SCHEMES, SchemeResult, exploration_ledger, run_brute_force, run_codebook, run_genie,
                      run_rigid, run_scheme, run_sequential)

__version__ = "0.1.0"
