#include "psylow/json_io.hpp"

#include <json.hpp>

namespace psylow {

namespace {

using nlohmann::json;

std::string decimal(const BigInt& n) { return n.str(); }

json report_to_json(const CountReport& r) {
  json orbits = json::array();
  for (const OrbitRow& row : r.orbits)
    orbits.push_back({{"rep_size", row.rep.order()}, {"orbit_len", row.length}});
  return json{{"spec", r.spec_text},
              {"p", r.p},
              {"a", r.a},
              {"count", decimal(r.count)},
              {"mod_p", r.mod_p},
              {"mod_p2", r.mod_p2},
              {"orbits", std::move(orbits)},
              {"sylow_order", decimal(r.sylow_order)}};
}

json verdict_to_json(const Verdict& v) {
  json w;  // null unless a witness exists
  if (v.witness)
    w = json{{"spec", v.witness->spec.to_string()}, {"a", v.witness->a}};
  return json{{"p", v.p},
              {"n", v.n},
              {"status", to_string(v.status)},
              {"witness", std::move(w)},
              {"notes", v.notes}};
}

}  // namespace

std::string count_report_json(const CountReport& r) {
  return report_to_json(r).dump(2);
}

std::string verdict_json(const Verdict& v) { return verdict_to_json(v).dump(2); }

std::string verdicts_json(const std::vector<Verdict>& vs) {
  json arr = json::array();
  for (const Verdict& v : vs) arr.push_back(verdict_to_json(v));
  return arr.dump(2);
}

}  // namespace psylow
