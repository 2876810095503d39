#include "cascade/emotion.hpp"

#include <algorithm>

namespace cascade {

EmotionState update(EmotionState state, EmotionEvent event, const EmotionParams& params) {
  double impulse = 0.0;
  double pressure = 0.0;
  switch (event) {
    case EmotionEvent::ProgressMade: impulse = params.delta_pos; break;
    case EmotionEvent::ErrorDetected:
      impulse = -params.delta_err;
      pressure = params.phi_err;
      break;
    case EmotionEvent::ImpasseHit:
      impulse = -params.delta_imp;
      pressure = params.phi_imp;
      break;
    case EmotionEvent::PlanChanged: pressure = params.phi_change; break;
    case EmotionEvent::TaskSolved: impulse = params.delta_solve; break;
  }
  return {
      std::clamp(params.lambda * state.valence + impulse, -1.0, 1.0),
      std::clamp(state.frustration + pressure, 0.0, 1.0),
  };
}

}  // namespace cascade
