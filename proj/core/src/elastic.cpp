// Copyright 2026 The obsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "obsim/exemplars/elastic.hpp"

#include <algorithm>
#include <cmath>

namespace obsim {
namespace {

std::vector<double> fragments_of(const ScenarioState& s) { return std::get<ElasticBandState>(s).fragments; }

// One branch per fragment: the pick draw lands in [i/n, (i+1)/n).
std::vector<Branch> per_fragment_branches(const ElasticBandState& s) {
  const double n = static_cast<double>(s.fragments.size());
  std::vector<Branch> out;
  out.reserve(s.fragments.size());
  for (std::size_t i = 0; i < s.fragments.size(); ++i) {
    out.push_back({{(static_cast<double>(i) + 0.5) / n}, 1.0 / n});
  }
  return out;
}

std::size_t pick_fragment(const ElasticBandState& state, DrawSource& rng) {
  const std::size_t n = state.fragments.size();
  const auto i = static_cast<std::size_t>(rng.next() * static_cast<double>(n));
  return std::min(i, n - 1);
}

}  // namespace

std::size_t longest_fragment(const ElasticBandState& state) noexcept {
  const auto it = std::max_element(state.fragments.begin(), state.fragments.end());
  return static_cast<std::size_t>(it - state.fragments.begin());
}

std::size_t count_shorter_than_half(const ElasticBandState& state) noexcept {
  const double half = 0.5 * state.original_length;
  return static_cast<std::size_t>(
      std::count_if(state.fragments.begin(), state.fragments.end(), [half](double f) { return f < half; }));
}

std::size_t count_longer_than_half(const ElasticBandState& state) noexcept {
  const double half = 0.5 * state.original_length;
  return static_cast<std::size_t>(
      std::count_if(state.fragments.begin(), state.fragments.end(), [half](double f) { return f > half; }));
}

std::pair<Outcome, ElasticBandState> left_handedness_observe(const ElasticBandState& state, DrawSource& rng) {
  const std::size_t i = longest_fragment(state);
  const double piece = state.fragments[i];
  // u is in (0, 1) but u * piece can still round up to piece.
  const double left = std::min(rng.next() * piece, std::nextafter(piece, 0.0));
  const double right = piece - left;

  ElasticBandState post = state;
  post.fragments[i] = left;
  post.fragments.insert(post.fragments.begin() + static_cast<std::ptrdiff_t>(i) + 1, right);
  return {outcome_of(left > 0.5 * piece), std::move(post)};
}

std::pair<Outcome, ElasticBandState> fragmentation_observe(const ElasticBandState& state, DrawSource& rng) {
  const std::size_t i = pick_fragment(state, rng);
  return {outcome_of(state.fragments[i] < 0.5 * state.original_length), state};
}

std::pair<Outcome, ElasticBandState> non_fragmentation_observe(const ElasticBandState& state,
                                                               DrawSource& rng) {
  const std::size_t i = pick_fragment(state, rng);
  return {outcome_of(state.fragments[i] > 0.5 * state.original_length), state};
}

double left_handedness_prob(const ElasticBandState&) noexcept { return 0.5; }

double fragmentation_prob(const ElasticBandState& state) noexcept {
  return static_cast<double>(count_shorter_than_half(state)) / static_cast<double>(state.fragments.size());
}

double non_fragmentation_prob(const ElasticBandState& state) noexcept {
  return static_cast<double>(count_longer_than_half(state)) / static_cast<double>(state.fragments.size());
}

ObservationProcess left_handedness_process() {
  // Every break leaves a state whose left-handedness probability is again 1/2,
  // so the no-region (u < 1/2) and the yes-region are each uniform.
  return make_process<ElasticBandState>(
      "left-handedness", "stretch the longest fragment until it breaks; longest piece in the left hand",
      left_handedness_observe, left_handedness_prob,
      [](const ElasticBandState&) { return std::vector<Branch>{{{0.25}, 0.5}, {{0.75}, 0.5}}; });
}

ObservationProcess fragmentation_process() {
  return make_process<ElasticBandState>("fragmentation",
                                        "blind pick of one fragment; shorter than half the original length",
                                        fragmentation_observe, fragmentation_prob, per_fragment_branches);
}

ObservationProcess non_fragmentation_process() {
  return make_process<ElasticBandState>("non-fragmentation",
                                        "blind pick of one fragment; longer than half the original length",
                                        non_fragmentation_observe, non_fragmentation_prob,
                                        per_fragment_branches);
}

PropertyDef left_handedness_property() { return {"left-handedness", left_handedness_process(), fragments_of}; }
PropertyDef fragmentation_property() { return {"fragmentation", fragmentation_process(), fragments_of}; }
PropertyDef non_fragmentation_property() {
  return {"non-fragmentation", non_fragmentation_process(), fragments_of};
}

}  // namespace obsim
