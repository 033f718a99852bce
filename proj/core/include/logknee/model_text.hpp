#pragma once

#include <string>
#include <vector>

#include "logknee/event_log.hpp"
#include "logknee/petri_net.hpp"
#include "logknee/process_tree.hpp"

namespace logknee {

// Version of the textual model serialization documented in FORMAT.md.
// Bump when the layout changes; tests pin the bytes.
inline constexpr int kModelTextFormatVersion = 1;

enum class ModelKind { Tree, Petri };

// The textual abstraction placed in prompts: deterministic, with stable
// identifiers, so equal inputs produce byte-identical bodies.
struct ModelText {
  std::string body;
  ModelKind model_kind = ModelKind::Petri;
  std::size_t activity_count = 0;
  std::size_t char_length = 0;
};

// Nested operator notation, e.g. SEQ(a, XOR(b, tau), LOOP(c, d)).
ModelText render_tree(const ProcessTree& tree);

// Line-based sections: STATS, PLACES, TRANSITIONS, ARCS, INITIAL, FINAL.
// Silent transitions render as tau_<i>; arcs are sorted pairs. The
// exact layout is documented in FORMAT.md and pinned by tests.
ModelText render_petri(const PetriNet& net, const LogStats& stats);

// Labels listed in the TRANSITIONS section of a rendered Petri body,
// tau_* excluded. Shared with the offline judge, which recovers the
// reference alphabet from prompt text.
std::vector<std::string> transition_labels_of_body(const std::string& body);

}  // namespace logknee
