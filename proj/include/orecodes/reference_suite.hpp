/*
   Copyright 2026 the orecodes authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// The bundled worked-example suite: a battery of exact-replay fixtures
// over the shipped ring configurations (F_4, F_8, F_5[x]/(x^5-1) with
// d/dx, and the 8-element triangular ring).  Each fixture recomputes a
// known construction -- factorizations, generator and control matrices,
// root censuses, Wedderburn structure laws -- and compares against
// independently transcribed expected values.  Where a transcribed
// matrix entry is known to disagree with recomputation, the fixture
// flags the position and reports the recomputed oracle value.

#pragma once

#include <string>
#include <vector>

namespace orecodes {

struct FixtureResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Runs every fixture; config_dir must contain f4.ring, f5x.ring,
/// f8.ring and tri2.ring.  Never throws: a fixture that throws is
/// reported as failed with the exception text as detail.
std::vector<FixtureResult> run_reference_suite(const std::string& config_dir);

/// One line per fixture: "PASS|FAIL <fixture-name> <detail>".
std::string format_report(const std::vector<FixtureResult>& results);

}  // namespace orecodes
