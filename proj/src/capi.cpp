#include "confres/confres.h"

#include <exception>
#include <optional>
#include <string>

#include "session.hpp"

struct confres_prover {
  confres::Session session;
  std::string error;
  std::string text;
  std::optional<confres::KripkeModel> model;
};

namespace {

using confres::Session;

template <typename Fn>
confres_status guarded(confres_prover* p, Fn&& fn) {
  if (p == nullptr) return CONFRES_ERR_ARGUMENT;
  p->error.clear();
  try {
    fn(p->session);
    return CONFRES_OK;
  } catch (const confres::ParseError& e) {
    p->error = e.what();
    return CONFRES_ERR_PARSE;
  } catch (const confres::BudgetExceeded& e) {
    p->error = e.what();
    return CONFRES_ERR_BUDGET;
  } catch (const std::invalid_argument& e) {
    p->error = e.what();
    return CONFRES_ERR_PARSE;
  } catch (const std::logic_error& e) {
    p->error = e.what();
    return CONFRES_ERR_STATE;
  } catch (const std::exception& e) {
    p->error = e.what();
    return CONFRES_ERR_INTERNAL;
  }
}

const char* hold(confres_prover* p, std::string s) {
  p->text = std::move(s);
  return p->text.c_str();
}

}  // namespace

extern "C" {

const char* confres_version(void) { return "0.1.0"; }

const char* confres_verdict_name(confres_verdict v) {
  switch (v) {
    case CONFRES_VERDICT_VALID: return "VALID";
    case CONFRES_VERDICT_NOT_VALID: return "NOT VALID";
    case CONFRES_VERDICT_SAT: return "SAT";
    case CONFRES_VERDICT_UNSAT: return "UNSAT";
    case CONFRES_VERDICT_UNKNOWN: return "UNKNOWN (resource limit)";
  }
  return "";
}

confres_prover* confres_prover_new(void) {
  try {
    return new confres_prover{};
  } catch (...) {
    return nullptr;
  }
}

void confres_prover_free(confres_prover* p) { delete p; }

const char* confres_last_error(const confres_prover* p) { return p ? p->error.c_str() : ""; }

confres_status confres_set_logic(confres_prover* p, const char* logic) {
  if (logic == nullptr) return CONFRES_ERR_ARGUMENT;
  return guarded(p, [&](Session& s) { s.set_logic(logic); });
}

confres_status confres_set_agents(confres_prover* p, int agents) {
  if (agents < 0) return CONFRES_ERR_ARGUMENT;
  return guarded(p, [&](Session& s) { s.set_agents(agents); });
}

confres_status confres_set_mode(confres_prover* p, confres_mode mode) {
  if (mode != CONFRES_MODE_VALID && mode != CONFRES_MODE_SAT) return CONFRES_ERR_ARGUMENT;
  return guarded(p, [&](Session& s) { s.set_mode(mode == CONFRES_MODE_VALID ? confres::Mode::Valid : confres::Mode::Sat); });
}

confres_status confres_set_limits(confres_prover* p, size_t max_clauses, double max_seconds) {
  if (max_clauses == 0 || !(max_seconds > 0)) return CONFRES_ERR_ARGUMENT;
  return guarded(p, [&](Session& s) { s.set_limits(confres::Limits{max_clauses, max_seconds}); });
}

confres_status confres_set_all_rules(confres_prover* p, int on) {
  return guarded(p, [&](Session& s) { s.set_all_rules(on != 0); });
}

confres_status confres_set_eager_definitions(confres_prover* p, int on) {
  return guarded(p, [&](Session& s) { s.set_eager_definitions(on != 0); });
}

confres_status confres_load_formula(confres_prover* p, const char* formula) {
  if (formula == nullptr) return CONFRES_ERR_ARGUMENT;
  return guarded(p, [&](Session& s) {
    p->model.reset();
    s.load_formula(formula);
  });
}

confres_status confres_load_snf(confres_prover* p, const char* clauses) {
  if (clauses == nullptr) return CONFRES_ERR_ARGUMENT;
  return guarded(p, [&](Session& s) {
    p->model.reset();
    s.load_clauses(clauses);
  });
}

const char* confres_snf_text(confres_prover* p) {
  std::string out;
  if (guarded(p, [&](Session& s) { out = s.problem().to_text(); }) != CONFRES_OK) return nullptr;
  return hold(p, std::move(out));
}

confres_status confres_run(confres_prover* p, confres_verdict* verdict) {
  if (verdict == nullptr) return CONFRES_ERR_ARGUMENT;
  return guarded(p, [&](Session& s) {
    switch (s.run()) {
      case confres::Verdict::Valid: *verdict = CONFRES_VERDICT_VALID; break;
      case confres::Verdict::NotValid: *verdict = CONFRES_VERDICT_NOT_VALID; break;
      case confres::Verdict::Sat: *verdict = CONFRES_VERDICT_SAT; break;
      case confres::Verdict::Unsat: *verdict = CONFRES_VERDICT_UNSAT; break;
      case confres::Verdict::Unknown: *verdict = CONFRES_VERDICT_UNKNOWN; break;
    }
  });
}

const char* confres_proof_text(confres_prover* p) {
  if (p == nullptr) return nullptr;
  auto proof = p->session.proof_text();
  return proof ? hold(p, std::move(*proof)) : nullptr;
}

confres_status confres_get_stats(const confres_prover* p, confres_stats* out) {
  if (p == nullptr || out == nullptr) return CONFRES_ERR_ARGUMENT;
  if (!p->session.has_result()) return CONFRES_ERR_STATE;
  const auto& r = p->session.result();
  *out = confres_stats{r.derivation.size(), r.stats.generated, r.stats.selected, r.stats.forward_subsumed,
                       r.stats.backward_subsumed, r.stats.seconds};
  return CONFRES_OK;
}

confres_status confres_search_model(confres_prover* p, int max_worlds, int budget, int* found) {
  if (found == nullptr || max_worlds < 1 || budget < 1) return CONFRES_ERR_ARGUMENT;
  return guarded(p, [&](Session& s) {
    p->model = s.search_model(confres::SearchOptions{max_worlds, budget});
    *found = p->model ? 1 : 0;
  });
}

const char* confres_model_text(confres_prover* p) {
  if (p == nullptr || !p->model) return nullptr;
  return hold(p, confres::countermodel_text(*p->model));
}

const char* confres_model_json(confres_prover* p) {
  if (p == nullptr || !p->model) return nullptr;
  return hold(p, confres::countermodel_json(*p->model));
}

}  // extern "C"
