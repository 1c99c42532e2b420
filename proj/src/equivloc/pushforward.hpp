/*
   Copyright 2026 The equivloc authors

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

#ifndef EQUIVLOC_PUSHFORWARD_HPP
#define EQUIVLOC_PUSHFORWARD_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "equivloc/ratfunc.hpp"
#include "equivloc/residue.hpp"
#include "equivloc/space.hpp"

namespace equivloc {

// Which displayed residue integrand to use.  For Grassmannians of type A the
// first and rewritten forms coincide.
enum class Form { first, rewritten, unified };

std::string_view form_name(Form f);
Form parse_form(std::string_view text);
inline constexpr Form kAllForms[] = {Form::first, Form::rewritten, Form::unified};

struct FixedPoint {
  WeylElement element;
  // z_i -> +-t_{perm(i)}, keyed by residue-variable slot.
  std::map<std::size_t, LinearForm> restriction;
  // Tangent weights at the point; their product is the Euler class.
  std::vector<LinearForm> euler_factors;
};

std::vector<FixedPoint> fixed_points(const SpaceDescriptor& space);

// Checks that V lives on the space's table and is symmetric in the residue
// variables; with `symmetrize` a non-symmetric V is averaged instead.
Polynomial prepare_class(const SpaceDescriptor& space, const Polynomial& v, bool symmetrize);

// Sum over fixed points of V|_p / e_p, brought to one common denominator of
// distinct Euler factors and divided out exactly.
Polynomial abbv_pushforward(const SpaceDescriptor& space, const Polynomial& v,
                            bool symmetrize = false);
// The same sum evaluated at a numeric torus point (only t-coordinates are
// read).  Throws when an Euler factor vanishes there.
Rational abbv_evaluate(const SpaceDescriptor& space, const Polynomial& v,
                       std::span<const Rational> point);

struct Integrand {
  FactoredRatFunc function;
  Rational prefactor;
  ResidueOrder order;
};

Integrand build_integrand(const SpaceDescriptor& space, const Polynomial& v, Form form);

Polynomial residue_pushforward(const SpaceDescriptor& space, const Polynomial& v,
                               Form form, bool symmetrize = false);

struct AgreementEntry {
  std::string method;  // "abbv", "residue:first", ...
  std::optional<Polynomial> value;
  bool agrees = false;
  std::string error;
};

struct AgreementReport {
  std::vector<AgreementEntry> entries;
  bool all_agree() const;
};

struct VerifyOptions {
  bool symmetrize = false;
  // Random torus points tried before the symbolic comparison; 0 disables.
  int prefilter_points = 25;
  std::uint64_t seed = 1;
  // Adds 1 to every residue result; used to exercise failure paths.
  bool inject_disagreement = false;
};

AgreementReport verify_agreement(const SpaceDescriptor& space, const Polynomial& v,
                                 std::span<const Form> forms,
                                 const VerifyOptions& options = {});

// Constant term: the non-equivariant integral.
Rational specialize_at_zero(const Polynomial& p);

}  // namespace equivloc

#endif  // EQUIVLOC_PUSHFORWARD_HPP
