#include "deltaring/report_json.hpp"

#include <cstdio>
#include <sstream>

namespace deltaring {

namespace {

Json witness_json(const std::vector<WitnessEntry>& witness) {
  Json arr = Json::array();
  for (const auto& w : witness) arr.push_back(Json{{"role", w.role}, {"element", w.element}, {"display", w.display}});
  return arr;
}

Json set_json(const FiniteRing& r, const ElementSet& s) {
  Json elements = Json::array();
  Json display = Json::array();
  for (Element a : s.members()) {
    elements.push_back(a);
    display.push_back(r.element_name(a));
  }
  return Json{{"size", s.size()}, {"elements", std::move(elements)}, {"display", std::move(display)}};
}

struct NamedSet {
  const char* key;
  const char* title;
  const ElementSet& (RingProfile::*get)() const;
};

const NamedSet kSets[] = {
    {"U", "U", &RingProfile::units},
    {"Id", "Id", &RingProfile::idempotents},
    {"Nil", "Nil", &RingProfile::nilpotents},
    {"J", "J", &RingProfile::jacobson},
    {"Delta", "Delta", &RingProfile::delta},
    {"NilStar", "Nil*", &RingProfile::prime_radical},
    {"QN", "QN", &RingProfile::quasinilpotents},
};

std::string witness_text(const std::vector<WitnessEntry>& witness) {
  std::string out;
  for (const auto& w : witness) {
    if (!out.empty()) out += ", ";
    out += w.role + " = " + w.display + " (#" + std::to_string(w.element) + ")";
  }
  return out;
}

std::string set_text(const FiniteRing& r, const ElementSet& s) {
  std::string out = "{";
  bool first = true;
  for (Element a : s.members()) {
    if (!first) out += ", ";
    first = false;
    out += r.element_name(a);
  }
  return out + "}";
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

}  // namespace

Json report_to_json(const CheckReport& report) {
  Json j;
  j["subject"] = report.subject;
  j["predicate"] = report.predicate;
  j["verdict"] = report.verdict;
  j["witness"] = witness_json(report.witness);
  j["notes"] = report.notes;
  return j;
}

Json outcome_to_json(const CheckOutcome& outcome) {
  Json j;
  j["check_id"] = outcome.check_id;
  j["statement"] = outcome.statement;
  j["specialization"] = outcome.specialization;
  j["scope_size"] = outcome.scope_size;
  j["verdict"] = outcome.verdict ? "pass" : "fail";
  Json cex = Json::array();
  for (const auto& c : outcome.counterexamples) {
    cex.push_back(Json{{"ring", c.ring}, {"detail", c.detail}, {"witness", witness_json(c.witness)}});
  }
  j["counterexamples"] = std::move(cex);
  j["warnings"] = outcome.warnings;
  j["notes"] = outcome.notes;
  if (outcome.runtime_ms) {
    j["runtime_ms"] = *outcome.runtime_ms;
  } else {
    j["runtime_ms"] = nullptr;
  }
  return j;
}

Json check_json(const CheckReport& report) {
  Json j{{"kind", "check"}};
  const Json body = report_to_json(report);
  for (const auto& [k, v] : body.items()) j[k] = v;
  return j;
}

Json info_json(const RingProfile& profile) {
  const FiniteRing& r = profile.ring();
  Json j{{"kind", "info"}, {"ring", r.label()}, {"order", r.order()}, {"commutative", r.is_commutative()}};
  Json sets;
  for (const auto& s : kSets) sets[s.key] = set_json(r, (profile.*s.get)());
  j["sets"] = std::move(sets);
  Json classes = Json::array();
  for (const auto& c : ring_classes()) classes.push_back(report_to_json(c.evaluate(profile)));
  j["classes"] = std::move(classes);
  j["notes"] = Json::array({kQuasinilpotentDefinition});
  return j;
}

Json verify_json(const std::vector<CheckOutcome>& outcomes) {
  bool all = true;
  Json checks = Json::array();
  for (const auto& o : outcomes) {
    all = all && o.verdict;
    checks.push_back(outcome_to_json(o));
  }
  return Json{{"kind", "verify"}, {"all_passed", all}, {"checks", std::move(checks)}};
}

Json search_json(const std::vector<std::string>& include, const std::vector<std::string>& exclude,
                 std::size_t max_order, const std::vector<std::string>& rings) {
  return Json{{"kind", "search"}, {"include", include}, {"exclude", exclude},
              {"max_order", max_order}, {"rings", rings}};
}

Json classes_json() {
  Json arr = Json::array();
  for (const auto& c : ring_classes()) arr.push_back(Json{{"name", c.name}, {"definition", c.definition}});
  return Json{{"kind", "classes"}, {"classes", std::move(arr)}};
}

std::string info_text(const RingProfile& profile) {
  const FiniteRing& r = profile.ring();
  std::ostringstream out;
  out << "ring:  " << r.label() << "\norder: " << r.order() << "\n";
  for (const auto& s : kSets) {
    const ElementSet& set = (profile.*s.get)();
    out << pad(std::string(s.title) + ":", 7) << "|" << set.size() << "| ";
    if (set.size() <= 64) {
      out << set_text(r, set);
    } else {
      out << "(" << set.size() << " elements, use --json for the full list)";
    }
    out << "\n";
  }
  out << "  where " << kQuasinilpotentDefinition << "\n";
  out << "\nclasses:\n";
  for (const auto& c : ring_classes()) {
    const CheckReport rep = c.evaluate(profile);
    out << "  " << pad(c.name, 22) << (rep.verdict ? "true" : "false");
    if (!rep.witness.empty()) out << "   " << witness_text(rep.witness);
    out << "\n";
  }
  return out.str();
}

std::string check_text(const CheckReport& report) {
  std::string out = report.predicate + "(" + report.subject + "): " + (report.verdict ? "true" : "false") + "\n";
  if (!report.witness.empty()) out += "  witness: " + witness_text(report.witness) + "\n";
  if (!report.notes.empty()) out += "  notes: " + report.notes + "\n";
  return out;
}

std::string verify_text(const std::vector<CheckOutcome>& outcomes) {
  std::ostringstream out;
  out << pad("check", 12) << pad("scope", 7) << pad("result", 8) << "statement\n";
  std::size_t failed = 0;
  for (const auto& o : outcomes) {
    if (!o.verdict) ++failed;
    out << pad(o.check_id, 12) << pad(std::to_string(o.scope_size), 7) << pad(o.verdict ? "pass" : "FAIL", 8)
        << o.statement;
    if (o.runtime_ms) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "  [%.1f ms]", *o.runtime_ms);
      out << buf;
    }
    out << "\n";
    for (const auto& w : o.warnings) out << "    warning: " << w << "\n";
    for (const auto& n : o.notes) out << "    " << n << "\n";
  }
  for (const auto& o : outcomes) {
    for (const auto& c : o.counterexamples) {
      out << "\n" << o.check_id << " counterexample in " << c.ring << ": " << c.detail << "\n";
      if (!c.witness.empty()) out << "  witness: " << witness_text(c.witness) << "\n";
    }
  }
  out << "\n" << (outcomes.size() - failed) << "/" << outcomes.size() << " checks passed\n";
  return out.str();
}

std::string search_text(const std::vector<std::string>& rings) {
  std::string out;
  for (const auto& r : rings) out += r + "\n";
  if (rings.empty()) out = "(no rings)\n";
  return out;
}

std::string classes_text() {
  std::string out;
  for (const auto& c : ring_classes()) out += pad(c.name, 22) + c.definition + "\n";
  return out;
}

}  // namespace deltaring
