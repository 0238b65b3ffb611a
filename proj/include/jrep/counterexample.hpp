#pragma once

#include "jrep/profile.hpp"

namespace jrep {

enum class CounterexampleSource {
  /// The 5992-voter table1 fixture, padded for k > 6 with 1000 voters per
  /// extra candidate.
  PublishedFixture,
  /// A fresh optimum of the k=6 weight program scaled to integer counts.
  LinearProgram,
};

/// Profile on which RAV with committee size k fails justified
/// representation, for k >= 6.
///
/// The linear-program route scales an optimal solution x of the k=6 weight
/// program to integers over n voters (n a multiple of 5), then adds n/5
/// voters approving only a fresh candidate c_7. Each round's winner has
/// weight above n/5, so c_7 is never elected although its n/5 = (6n/5)/6
/// supporters form a cohesive group. For k > 6, k - 6 further candidates are
/// added, each approved alone by a block of the same size.
///
/// Both routes re-run RAV and the JR checker on the output before returning
/// and throw std::logic_error if the profile does not behave as claimed.
/// Throws InvalidArgument for k < 6 or k > 63.
BallotProfile rav_counterexample(int k, CounterexampleSource source);

}  // namespace jrep
