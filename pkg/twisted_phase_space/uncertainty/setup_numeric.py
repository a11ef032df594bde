import os

from twisted_phase_space.utils.utils_io import save_json_obj


def setup_numeric_params(seed=0, grid_points=2048, n_states=100, xi=1.0, save_dir=None):

    numeric_params = {
        'seed': seed,
        'grid_points': grid_points,
        'n_states': n_states,
        'xi': xi,
        'half_width': 8.0,            # grid spans mean +- half_width * width
        'max_refinements': 3,
        'convergence_tol': 1e-10,
        'consistency_rtol': 1e-8,
        'consistency_atol': 1e-12,
        'slack_tol': 1e-9,
        'norm_tol': 1e-10,
        'mean_range': (-1.0, 1.0),
        'width_range': (0.5, 1.5),
        'offset_range': (-1.0, 1.0),
    }

    if grid_points < 16:
        raise ValueError(f'grid_points must be at least 16, got {grid_points}')
    if xi <= 0:
        raise ValueError(f'xi must be positive, got {xi}')

    if save_dir:
        save_json_obj(numeric_params, os.path.join(save_dir, 'numeric_params'))

    return numeric_params
