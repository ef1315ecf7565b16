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

#ifndef ORECODES_ERRORS_HPP
#define ORECODES_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace orecodes {

/// An operation that is well-posed in general but not available on the
/// given inputs (left division without an invertible endomorphism, a
/// control matrix without a two-sided factorization, ...).  The CLI maps
/// this to exit status 3.
class unavailable_error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// An enumeration whose search space exceeds its hard budget.  Always a
/// refusal, never a silent truncation.
class budget_error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// The common-multiple closure hit an evaluation value that is neither
/// zero nor a unit, so the step cannot be performed in this ring.
class lclm_error : public unavailable_error {
   public:
    lclm_error(std::size_t point_index, const std::string& what)
        : unavailable_error(what), point_index_(point_index) {}
    std::size_t point_index() const noexcept { return point_index_; }

   private:
    std::size_t point_index_;
};

}  // namespace orecodes

#endif
