#!/usr/bin/env python3
# Copyright 2026 The qdgate Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Independent SI evaluation of the GaAs carrier widths and phonon cutoffs.

Everything here is computed directly in SI units from CODATA constants and
the GaAs material set, without sharing any code with the C++ library. The
acceptance suite compares the library's SpectralModel against this output.

Usage: spectral_oracle.py [output.json]
"""
import json
import math
import sys

HBAR = 1.054571817e-34        # J s
ELECTRON_MASS = 9.1093837015e-31  # kg
ELEMENTARY_CHARGE = 1.602176634e-19  # C

# GaAs
D_E = 14.6 * ELEMENTARY_CHARGE   # J
D_H = 4.8 * ELEMENTARY_CHARGE    # J
MASS_DENSITY = 5.3e3             # kg / m^3  (5.3 g/cm^3)
SOUND_SPEED = 4.8e3              # m / s     (4.8e5 cm/s)
M_E = 0.067 * ELECTRON_MASS
M_H = 0.34 * ELECTRON_MASS
CONFINEMENT = 8.3e-3             # J / m^2


def width(mass):
    return math.sqrt(HBAR / math.sqrt(mass * CONFINEMENT))


def to_mev(angular_frequency):
    return HBAR * angular_frequency / ELEMENTARY_CHARGE * 1e3


def main():
    d_e = width(M_E)
    d_h = width(M_H)
    w_e = math.sqrt(2.0) * SOUND_SPEED / d_e
    w_h = math.sqrt(2.0) * SOUND_SPEED / d_h
    w_eh = 2.0 * SOUND_SPEED / math.sqrt(d_e ** 2 + d_h ** 2)
    # J(w) = D_e^2 w^3 / (2 mu hbar c_s^5) with w in rad/s gives a rate in 1/s.
    pref_si = D_E ** 2 / (2.0 * MASS_DENSITY * HBAR * SOUND_SPEED ** 5)
    w_per_mev = 1e-3 * ELEMENTARY_CHARGE / HBAR
    pref_internal = pref_si * w_per_mev ** 3 * 1e-12  # 1/ps per meV^3
    out = {
        "d_e_nm": d_e * 1e9,
        "d_h_nm": d_h * 1e9,
        "w_e_mev": to_mev(w_e),
        "w_h_mev": to_mev(w_h),
        "w_eh_mev": to_mev(w_eh),
        "prefactor_per_ps_per_mev3": pref_internal,
    }
    text = json.dumps(out, indent=2, sort_keys=True)
    if len(sys.argv) > 1:
        with open(sys.argv[1], "w") as fh:
            fh.write(text + "\n")
    print(text)


if __name__ == "__main__":
    main()
