/*
 * Copyright 2026 The parabetti Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <vector>

#include "parabetti/parabolic_data.hpp"
#include "parabetti/partition.hpp"
#include "parabetti/rational.hpp"

namespace parabetti {

// sigma_R(I) = sum_P sum_{k>l, i>t} I^P_{i,k} I^P_{t,l}, summed block by
// block from the last block backwards.
long sigma(const Partition& part);
// sum_P sum_{k>l, i<t} I^P_{i,k} I^P_{t,l}
long sigma_prime(const Partition& part);
// delta_R(L) = sum_P sum_{i>t} (R-L)^P_i L^P_t
long delta(const QuasiParabolicData& r, const QuasiParabolicData& l);

// Two readings of the pairing sum_{k>l}(...) in chi and C: the index
// pattern as typeset (delta_l nu_k - delta_k nu_k, with +(g-1) in chi) and
// the antisymmetric one (delta_l nu_k - delta_k nu_l, with -(g-1) in chi,
// i.e. the Riemann-Roch Euler characteristic). Only the antisymmetric
// reading is additive and satisfies C = sigma - chi.
enum class PairingReading { Printed, Antisymmetric };

long chi_dr(const std::vector<int>& ranks, const std::vector<long>& degrees, int genus,
            PairingReading reading = PairingReading::Antisymmetric);

// sum_{k>l}(d_l n_k - d_k n_l) - sigma_R(I)
long N_exp(const Partition& part, const std::vector<long>& degrees);
// sigma_R(I) - sum_{k>l}(d_l n_k - d_k n_l) + (g-1) sum_{k>l} n_l n_k
long C_exp(const Partition& part, const std::vector<long>& degrees, int genus,
           PairingReading reading = PairingReading::Antisymmetric);

// -(n - n_r) d - sigma_R(I) + (2n - n_1 - n_r)
long M_prime(const Partition& part, long degree);
// sum_{k<r} (n_k + n_{k+1}) floor((n_1+..+n_k) lambda - alpha(R^I_{<=k}))
long M_floor(const Partition& part, const Rational& lambda);
// sum_{k<r} (n_k + n_{k+1}) (floor(...) + 1) + (g-1) sum_{i<j} n_i n_j
long M_g(const Partition& part, const Rational& lambda, int genus);

long flag_dim(const QuasiParabolicData& r);
long moduli_dim(const QuasiParabolicData& r, int genus);

// n(L) lambda - alpha(L)
Rational d_lambda(const QuasiParabolicData& l, const Rational& lambda);

}  // namespace parabetti
