"""
Helper classes and functions
============================

Parameters
----------

All tunable numbers of the package live in one plain attribute class. The
library reads its defaults from the module level ``DEFAULTS`` instance, the
command line builds its own instance and overwrites single attributes from
the flags.
"""

import json
import logging
import math


class Parameters:
    def __init__(self):
        # maximal number of steps of a Euclidean run before we call it a bug
        self.sea_guard = 10000

        # maximal number of multiples j*z visited by the pigeonhole search
        self.approximation_cap = 10 ** 6

        # maximal orbit length of the f-map before the verdict "cap"
        self.f_map_steps = 200

        # default generation bounds
        self.circle_depth = 6
        self.norm_bound = 10
        self.sphere_depth = 3

        # verification suites, see the ``verify`` command
        self.circle_den_bound = 50
        self.quadric_entry_bound = 20
        self.eisenstein_norm_bound = 50
        self.gaussian_norm_bound = 50
        self.sigma_norm_bound = 30
        # the pair norm check is quadratic in the number of spheres
        self.sigma_pair_norm_bound = 10
        self.sigma_discriminants = (1, 2, 3, 7, 11, 19)
        # height of the rationals x, y fed to the secant enumeration
        self.secant_height_bound = 8
        # largest |entry| of the solutions the corollary suite sweeps
        self.corollary_entry_bound = 100
        self.random_pairs = 1000
        self.seed = 6174

        # svg output
        self.svg_size = 800
        self.svg_margin = 20
        self.svg_stroke = 0.5


DEFAULTS = Parameters()


"""
Logging
-------

Modules only ever call ``logging.getLogger(__name__)``. The root logger is
configured exactly once, by the command line entry point.
"""


def setup_logging(verbose=False, quiet=False):
    level = logging.INFO
    if verbose:
        level = logging.DEBUG
    if quiet:
        level = logging.WARNING
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")
    logging.getLogger().setLevel(level)


"""
Output
------

Sphere and circle sets are written either as JSON (sorted, so the same flags
always give the same bytes) or as plain SVG 1.1 shapes. Spheres are drawn from
above: a disk of the sphere radius around its tangent point.

Both writers take plain records, the conversion from the exact objects happens
in the command line module.
"""


def dump_json(document, stream):
    """
    document:
        dict with the keys "D", "family" and "spheres"
    stream:
        text file object
    """
    json.dump(document, stream, sort_keys=True, indent=1)
    stream.write("\n")


class SvgCanvas:
    def __init__(self, x_range, y_range, prm=DEFAULTS):
        """
        x_range, y_range:
            (lo, hi) of the drawn window in user coordinates, y points up
        """
        self.x_lo, self.x_hi = (float(v) for v in x_range)
        self.y_lo, self.y_hi = (float(v) for v in y_range)
        if self.x_hi <= self.x_lo or self.y_hi < self.y_lo:
            raise ValueError(f"Empty svg window {x_range} x {y_range}.")
        self.prm = prm
        width = self.x_hi - self.x_lo
        height = max(self.y_hi - self.y_lo, width / 2)
        self.scale = (prm.svg_size - 2 * prm.svg_margin) / max(width, height)
        self.width = width * self.scale + 2 * prm.svg_margin
        self.height = height * self.scale + 2 * prm.svg_margin
        self.y_top = self.y_lo + height
        self.shapes = []

    def _map(self, x, y):
        m = self.prm.svg_margin
        return m + (x - self.x_lo) * self.scale, m + (self.y_top - y) * self.scale

    def circle(self, x, y, r, fill="none"):
        cx, cy = self._map(x, y)
        cr = r * self.scale
        if not all(math.isfinite(v) for v in (cx, cy, cr)):
            raise ValueError(f"Cannot draw circle at ({x}, {y}) with radius {r}.")
        self.shapes.append(
            f'<circle cx="{cx:.4f}" cy="{cy:.4f}" r="{cr:.4f}" '
            f'fill="{fill}" stroke="black" stroke-width="{self.prm.svg_stroke}"/>'
        )

    def line(self, x0, y0, x1, y1):
        ax, ay = self._map(x0, y0)
        bx, by = self._map(x1, y1)
        self.shapes.append(
            f'<line x1="{ax:.4f}" y1="{ay:.4f}" x2="{bx:.4f}" y2="{by:.4f}" '
            f'stroke="black" stroke-width="{self.prm.svg_stroke}"/>'
        )

    def svg(self):
        head = (
            '<?xml version="1.0" encoding="UTF-8"?>\n'
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'width="{self.width:.0f}" height="{self.height:.0f}">'
        )
        return "\n".join([head] + self.shapes + ["</svg>", ""])
