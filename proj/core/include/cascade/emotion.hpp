#pragma once

namespace cascade {

/// Signed affect plus accumulated abandonment pressure. Both components stay
/// inside their ranges after every update; the initial state is (0, 0).
struct EmotionState {
  double valence = 0.0;      // in [-1, 1]
  double frustration = 0.0;  // in [0, 1]

  friend bool operator==(const EmotionState&, const EmotionState&) = default;
};

enum class EmotionEvent { ProgressMade, ErrorDetected, ImpasseHit, PlanChanged, TaskSolved };

/// Dynamics constants. Valence follows a decay-plus-impulse recurrence
/// v' = clamp(lambda * v + d_event); frustration accumulates without decay,
/// f' = clamp(f + phi_event).
struct EmotionParams {
  double lambda = 0.9;      // valence decay per event, in (0, 1]
  double delta_pos = 0.2;   // valence impulse on progress
  double delta_err = 0.3;   // valence drop on a detected error
  double delta_imp = 0.4;   // valence drop on an impasse
  double delta_solve = 0.5; // valence impulse on solving
  double phi_err = 0.1;     // frustration added per detected error
  double phi_imp = 0.25;    // frustration added per impasse
  double phi_change = 0.3;  // frustration added per plan change
};

/// Pure update. Valence impulses: +delta_pos (ProgressMade), -delta_err
/// (ErrorDetected), -delta_imp (ImpasseHit), 0 (PlanChanged), +delta_solve
/// (TaskSolved). Frustration gains phi_err, phi_imp or phi_change on the
/// matching events and never decreases.
EmotionState update(EmotionState state, EmotionEvent event, const EmotionParams& params);

}  // namespace cascade
