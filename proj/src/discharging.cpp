#include "oddcolor/discharging.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <set>

namespace oddcolor {

std::string to_string(const Charge& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

Charge parse_charge(const std::string& text) {
  auto parse_int = [&](std::string_view s) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
      throw InputError("malformed rational \"" + text + "\"");
    }
    return value;
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Charge(parse_int(text));
  const std::int64_t den = parse_int(std::string_view(text).substr(slash + 1));
  if (den == 0) throw InputError("zero denominator in \"" + text + "\"");
  return Charge(parse_int(std::string_view(text).substr(0, slash)), den);
}

std::string Element::label() const { return (kind == Kind::Vertex ? "v" : "f") + std::to_string(id); }

std::string to_string(Rule r) {
  switch (r) {
    case Rule::R1: return "R1";
    case Rule::R2: return "R2";
    case Rule::R3: return "R3";
    case Rule::R4: return "R4";
  }
  return "R?";
}

const Charge& ChargeLedger::initial(const Element& e) const {
  return e.kind == Element::Kind::Vertex ? vertex_initial.at(e.id) : face_initial.at(e.id);
}

const Charge& ChargeLedger::final_charge(const Element& e) const {
  return e.kind == Element::Kind::Vertex ? vertex_final.at(e.id) : face_final.at(e.id);
}

ChargeLedger initial_charges(const AssociatedPlaneGraph& apg) {
  ChargeLedger ledger;
  const Graph& gs = apg.gstar();
  for (Vertex x = 0; x < gs.vertex_count(); ++x) {
    ledger.vertex_initial.emplace_back(static_cast<std::int64_t>(gs.degree(x)) - 4);
  }
  for (const Face& f : apg.faces()) {
    ledger.face_initial.emplace_back(static_cast<std::int64_t>(f.degree()) - 4);
  }
  ledger.vertex_final = ledger.vertex_initial;
  ledger.face_final = ledger.face_initial;
  return ledger;
}

namespace {

const Charge kHalf(1, 2);

// (7,7,10+)-face: three original corners, two of degree exactly 7 and one of
// degree at least 10.
bool is_seven_seven_ten(const AssociatedPlaneGraph& apg, const Face& f) {
  if (f.degree() != 3) return false;
  std::size_t sevens = 0, tens = 0;
  for (const auto& inc : f.walk) {
    if (apg.is_star(inc.vertex)) return false;
    const std::size_t d = apg.gstar().degree(inc.vertex);
    if (d == 7) ++sevens;
    if (d >= 10) ++tens;
  }
  return sevens == 2 && tens == 1;
}

bool has_star(const AssociatedPlaneGraph& apg, const Face& f) {
  return std::any_of(f.walk.begin(), f.walk.end(), [&](const auto& inc) { return apg.is_star(inc.vertex); });
}

std::size_t count_degree(const AssociatedPlaneGraph& apg, const Face& f, std::size_t d) {
  return static_cast<std::size_t>(std::count_if(f.walk.begin(), f.walk.end(), [&](const auto& inc) {
    return !apg.is_star(inc.vertex) && apg.gstar().degree(inc.vertex) == d;
  }));
}

// Amount an original vertex pays one incident face in phase one, with the
// rule that fires. At most one clause applies per incidence.
std::optional<std::pair<Charge, Rule>> vertex_payment(const AssociatedPlaneGraph& apg, const VertexTags& vt,
                                                      const FaceTags& ft, Vertex v, std::size_t fi) {
  const std::size_t dv = apg.gstar().degree(v);
  const Face& f = apg.face(fi);
  const FaceTag& tag = ft[fi];
  const std::size_t len = f.degree();
  if (dv >= 8) {
    if (is_poor(tag.kind) && len >= 3) return std::make_pair(Charge(1), Rule::R1);
    if ((tag.kind == FaceClass::SemiPoor && len >= 4) || (len == 3 && !is_poor(tag.kind))) {
      return std::make_pair(kHalf, Rule::R1);
    }
    return std::nullopt;
  }
  if (dv == 7) {
    const bool semi = tag.kind == FaceClass::SemiPoor;
    if ((semi && len == 4) || (semi && len == 5 && count_degree(apg, f, 7) >= 2) || (len == 3 && has_star(apg, f))) {
      return std::make_pair(kHalf, Rule::R2);
    }
    if (!vt.is_special_7[v] && is_seven_seven_ten(apg, f)) return std::make_pair(kHalf, Rule::R2);
  }
  return std::nullopt;
}

}  // namespace

ChargeLedger apply_rules(const AssociatedPlaneGraph& apg, const VertexTags& vt, const FaceTags& ft,
                         ChargeLedger ledger) {
  const std::size_t face_count = apg.faces().size();
  std::vector<Charge> income(face_count, Charge(0));

  // Phase one: vertex -> face, one payment per corner.
  for (Vertex v = 0; v < apg.original_count(); ++v) {
    for (std::size_t fi : apg.faces_around(v)) {
      if (auto pay = vertex_payment(apg, vt, ft, v, fi)) {
        ledger.transfers.push_back({Element::vertex(v), Element::face(fi), pay->first, pay->second});
        income[fi] += pay->first;
      }
    }
  }

  // Phase two: face -> 2-vertex, per incidence on the walk.
  for (std::size_t fi = 0; fi < face_count; ++fi) {
    const Face& f = apg.face(fi);
    const FaceTag& tag = ft[fi];
    const auto len = static_cast<std::int64_t>(f.degree());
    if (len >= 5 && tag.n2 > 0) {
      const Charge share(len - 4, static_cast<std::int64_t>(tag.n2));
      for (const auto& inc : f.walk) {
        if (!apg.is_star(inc.vertex) && apg.gstar().degree(inc.vertex) == 2) {
          ledger.transfers.push_back({Element::face(fi), Element::vertex(inc.vertex), share, Rule::R3});
        }
      }
    }
    if (len >= 4 && tag.n2_special > 0 && income[fi] != Charge(0)) {
      const Charge share = income[fi] / Charge(static_cast<std::int64_t>(tag.n2_special));
      for (const auto& inc : f.walk) {
        if (!apg.is_star(inc.vertex) && vt.is_special_2[inc.vertex]) {
          ledger.transfers.push_back({Element::face(fi), Element::vertex(inc.vertex), share, Rule::R4});
        }
      }
    }
  }

  ledger.vertex_final = ledger.vertex_initial;
  ledger.face_final = ledger.face_initial;
  replay_transfers(ledger, ledger.vertex_final, ledger.face_final);
  return ledger;
}

void replay_transfers(const ChargeLedger& ledger, std::vector<Charge>& vertex_charge,
                      std::vector<Charge>& face_charge) {
  auto slot = [&](const Element& e) -> Charge& {
    return e.kind == Element::Kind::Vertex ? vertex_charge.at(e.id) : face_charge.at(e.id);
  };
  for (const Transfer& t : ledger.transfers) {
    slot(t.source) -= t.amount;
    slot(t.target) += t.amount;
  }
}

std::vector<std::string> explain(const Element& e, const AssociatedPlaneGraph& apg, const LemmaReport& lemmas) {
  std::set<Vertex> touched;
  if (e.kind == Element::Kind::Vertex) {
    touched.insert(static_cast<Vertex>(e.id));
  } else {
    for (const auto& inc : apg.face(e.id).walk) touched.insert(inc.vertex);
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < lemmas.violations.size(); ++i) {
    const bool hit = std::any_of(lemmas.violations[i].begin(), lemmas.violations[i].end(), [&](const Witness& w) {
      switch (w.kind) {
        case Witness::Kind::Vertex: return touched.contains(static_cast<Vertex>(w.id));
        case Witness::Kind::Edge:
          return touched.contains(static_cast<Vertex>(w.id)) || touched.contains(static_cast<Vertex>(w.other));
        case Witness::Kind::Face:
          if (e.kind == Element::Kind::Face && w.id == e.id) return true;
          return std::any_of(apg.face(w.id).walk.begin(), apg.face(w.id).walk.end(),
                             [&](const auto& inc) { return touched.contains(inc.vertex); });
      }
      return false;
    });
    if (hit) labels.push_back("L" + std::to_string(i + 1));
  }
  return labels;
}

bool AuditReport::balanced() const {
  return std::all_of(components.begin(), components.end(), [](const ComponentAudit& c) {
    return c.sum_initial == Charge(-8) && c.sum_final == c.sum_initial;
  });
}

std::size_t AuditReport::negative_count() const {
  std::size_t n = 0;
  for (const auto& c : components) n += c.negatives.size();
  return n;
}

AuditReport audit(const OnePlanarDrawing& d, const AssociatedPlaneGraph& apg) {
  AuditReport report;
  const VertexTags vt = classify_vertices(d, apg);
  const FaceTags ft = classify_faces(apg, vt, d.base);
  report.ledger = apply_rules(apg, vt, ft, initial_charges(apg));
  report.lemmas = detect_lemma_violations(d, apg);

  report.components.resize(apg.component_count());
  for (std::size_t c = 0; c < apg.component_count(); ++c) report.components[c].component = c;

  const ChargeLedger& ledger = report.ledger;
  auto record = [&](std::size_t comp, const Element& e) {
    auto& entry = report.components[comp];
    entry.sum_initial += ledger.initial(e);
    entry.sum_final += ledger.final_charge(e);
    if (ledger.final_charge(e) < Charge(0)) {
      entry.negatives.push_back({e, ledger.final_charge(e), explain(e, apg, report.lemmas)});
    }
  };
  for (Vertex x = 0; x < apg.gstar().vertex_count(); ++x) record(apg.component_of_vertex(x), Element::vertex(x));
  for (std::size_t f = 0; f < apg.faces().size(); ++f) record(apg.component_of_face(f), Element::face(f));
  return report;
}

}  // namespace oddcolor
