#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "oddcolor/embedding.hpp"
#include "oddcolor/structure.hpp"

namespace oddcolor {

using Charge = boost::rational<std::int64_t>;

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Charge& q);
/// Inverse of to_string; throws InputError on malformed text.
Charge parse_charge(const std::string& text);

/// A vertex or a face of G*.
struct Element {
  enum class Kind { Vertex, Face };
  Kind kind;
  std::size_t id;

  static Element vertex(std::size_t v) { return {Kind::Vertex, v}; }
  static Element face(std::size_t f) { return {Kind::Face, f}; }
  std::string label() const;
  friend auto operator<=>(const Element&, const Element&) = default;
};

enum class Rule { R1, R2, R3, R4 };
std::string to_string(Rule r);

struct Transfer {
  Element source;
  Element target;
  Charge amount;
  Rule rule;
};

struct ChargeLedger {
  std::vector<Charge> vertex_initial;
  std::vector<Charge> face_initial;
  std::vector<Charge> vertex_final;
  std::vector<Charge> face_final;
  std::vector<Transfer> transfers;

  const Charge& initial(const Element& e) const;
  const Charge& final_charge(const Element& e) const;
};

/// mu(x) = d(x) - 4 for every vertex and face; final charges start equal.
ChargeLedger initial_charges(const AssociatedPlaneGraph& apg);

/**
 * Applies the four rules in two phases: every vertex-to-face payment (R1,
 * R2) first, then every face-to-vertex payment (R3, R4), where R4
 * redistributes the face's phase-one income. Payments are per incidence.
 */
ChargeLedger apply_rules(const AssociatedPlaneGraph& apg, const VertexTags& vt, const FaceTags& ft,
                         ChargeLedger ledger);

/// Applies the transfer log to the initial charges.
void replay_transfers(const ChargeLedger& ledger, std::vector<Charge>& vertex_charge,
                      std::vector<Charge>& face_charge);

struct NegativeElement {
  Element element;
  Charge final_charge;
  /// Lemma labels ("L1".."L8") with a witness touching the element.
  std::vector<std::string> explained_by;
};

struct ComponentAudit {
  std::size_t component = 0;
  Charge sum_initial;
  Charge sum_final;
  std::vector<NegativeElement> negatives;
};

struct AuditReport {
  std::vector<ComponentAudit> components;
  ChargeLedger ledger;
  LemmaReport lemmas;

  bool balanced() const;
  std::size_t negative_count() const;
};

/// Runs classification, discharging and the lemma detectors, then lists
/// every element with negative final charge per component.
AuditReport audit(const OnePlanarDrawing& d, const AssociatedPlaneGraph& apg);

/// Lemma labels whose witnesses touch the given element.
std::vector<std::string> explain(const Element& e, const AssociatedPlaneGraph& apg, const LemmaReport& lemmas);

}  // namespace oddcolor
