// Copyright 2026 The locfree Authors - All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Canonical forms, sphere sizes and growth rates for a small 1D group.

#include <iostream>

#include "locfree/canonical.hpp"
#include "locfree/counting.hpp"
#include "locfree/explorer.hpp"
#include "locfree/spectral.hpp"

int main() {
  using namespace locfree;

  const Group group(GroupSpec(Flavor::LF1, 4));
  const GroupSpec& spec = group.spec();
  const Generator f1 = spec.generator(1), f2 = spec.generator(2), f3 = spec.generator(3);

  // f3 f1 f2 f2^-1 f1 reduces to f3 f1^2: f2 cancels and f1 commutes with f3.
  const Word w{{f3, 1}, {f1, 1}, {f2, 1}, {f2, -1}, {f1, 1}};
  const NormalForm nf = canonicalize(group, w);
  std::cout << "canonical form: " << to_string(spec, nf) << " (length " << nf.length() << ")\n";

  const SphereProfile profile = bfs_spheres(spec, 5, Dedup::Stack);
  std::cout << "mu  sphere  recursion\n";
  for (int mu = 0; mu <= profile.mu_max(); ++mu)
    std::cout << mu << "   " << profile.sizes[static_cast<std::size_t>(mu)] << "  "
              << assemble_count(Flavor::LF1, 4, mu, true).value << '\n';

  const SpectralReport sr = dominant_eigenvalue(TransferOperator(Flavor::LF1, 4), 1e-12);
  std::cout << "dominant eigenvalue " << sr.lambda << ", sphere growth 1 + 2 lambda = "
            << 1.0 + 2.0 * sr.lambda << '\n';
}
