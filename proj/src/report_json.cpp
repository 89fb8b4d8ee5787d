#include "classprod/report_json.hpp"

#include <sstream>

#include "classprod/errors.hpp"

namespace classprod {

namespace {
  template <typename T>
  T field(Json const& j, char const* key) {
    try {
      return j.at(key).get<T>();
    } catch (nlohmann::json::exception const& e) {
      throw ParseError(std::string("report field \"") + key + "\": " + e.what());
    }
  }

  Json const& array_field(Json const& j, char const* key) {
    if (!j.contains(key) || !j.at(key).is_array()) {
      throw ParseError(std::string("report field \"") + key
                       + "\" is missing or not an array");
    }
    return j.at(key);
  }

  WitnessValue value_from_json(Json const& j) {
    if (j.is_boolean()) {
      return j.get<bool>();
    }
    if (j.is_number_integer()) {
      return j.get<std::int64_t>();
    }
    if (j.is_string()) {
      return j.get<std::string>();
    }
    throw ParseError("witness value must be a boolean, integer or string");
  }
}  // namespace

Json to_json(Witness const& w) {
  Json values = Json::object();
  for (auto const& [key, v] : w.values) {
    std::visit([&, &key = key](auto const& x) { values[key] = x; }, v);
  }
  return Json{{"elements", w.elements}, {"names", w.names}, {"values", values}};
}

Json to_json(SubVerdict const& s) {
  Json witnesses = Json::array();
  for (auto const& w : s.witnesses) {
    witnesses.push_back(to_json(w));
  }
  return Json{{"clause", s.clause},
              {"verdict", std::string(to_string(s.verdict))},
              {"pairs_checked", s.pairs_checked},
              {"witnesses", witnesses}};
}

Json to_json(VerifierReport const& r) {
  Json witnesses = Json::array();
  for (auto const& w : r.witnesses) {
    witnesses.push_back(to_json(w));
  }
  Json subs = Json::array();
  for (auto const& s : r.sub_verdicts) {
    subs.push_back(to_json(s));
  }
  return Json{{"statement_id", r.statement_id},
              {"group_id", r.group_id},
              {"hypotheses_met", r.hypotheses_met},
              {"pairs_checked", r.pairs_checked},
              {"verdict", std::string(to_string(r.verdict))},
              {"witnesses", witnesses},
              {"notes", r.notes},
              {"sub_verdicts", subs}};
}

Json to_json(std::vector<VerifierReport> const& reports) {
  Json out = Json::array();
  for (auto const& r : reports) {
    out.push_back(to_json(r));
  }
  return out;
}

Json to_json(ScanFlags const& f) {
  return Json{{"nilpotent", f.nilpotent},
              {"supersolvable", f.supersolvable},
              {"simple_nonabelian", f.simple_nonabelian},
              {"odd_order", f.odd_order},
              {"p_group", f.p_group}};
}

Json to_json(ScanRow const& row) {
  return Json{{"group_id", row.group_id},
              {"order", row.order},
              {"a_rep", row.a_rep},
              {"b_rep", row.b_rep},
              {"a_name", row.a_name},
              {"b_name", row.b_name},
              {"a_class_size", row.a_class_size},
              {"eta", row.eta},
              {"equal_centralizers", row.equal_centralizers},
              {"homogeneous", row.homogeneous},
              {"flags", to_json(row.flags)}};
}

Json to_json(ScanSummary const& s) {
  Json groups = Json::array();
  for (auto const& [g, n] : s.by_group) {
    groups.push_back(Json{{"group_id", g}, {"rows", n}});
  }
  Json sizes = Json::array();
  for (auto const& [k, n] : s.by_class_size) {
    sizes.push_back(Json{{"a_class_size", k}, {"rows", n}});
  }
  Json flags = Json::object();
  for (auto const& [f, n] : s.by_flag) {
    flags[f] = n;
  }
  return Json{{"total", s.total},
              {"by_group", groups},
              {"by_class_size", sizes},
              {"by_flag", flags}};
}

Witness witness_from_json(Json const& j) {
  Witness w;
  w.elements = field<std::vector<index_t>>(j, "elements");
  w.names    = field<std::vector<std::string>>(j, "names");
  if (!j.contains("values") || !j.at("values").is_object()) {
    throw ParseError("witness field \"values\" is missing or not an object");
  }
  for (auto const& [key, v] : j.at("values").items()) {
    w.values.emplace_back(key, value_from_json(v));
  }
  return w;
}

SubVerdict sub_verdict_from_json(Json const& j) {
  SubVerdict s;
  s.clause        = field<std::string>(j, "clause");
  s.verdict       = verdict_from_string(field<std::string>(j, "verdict"));
  s.pairs_checked = field<std::size_t>(j, "pairs_checked");
  for (auto const& w : array_field(j, "witnesses")) {
    s.witnesses.push_back(witness_from_json(w));
  }
  return s;
}

VerifierReport report_from_json(Json const& j) {
  VerifierReport r;
  r.statement_id   = field<std::string>(j, "statement_id");
  r.group_id       = field<std::string>(j, "group_id");
  r.hypotheses_met = field<bool>(j, "hypotheses_met");
  r.pairs_checked  = field<std::size_t>(j, "pairs_checked");
  try {
    r.verdict = verdict_from_string(field<std::string>(j, "verdict"));
  } catch (ParseError const&) {
    throw;
  } catch (Error const& e) {
    throw ParseError(e.what());
  }
  for (auto const& w : array_field(j, "witnesses")) {
    r.witnesses.push_back(witness_from_json(w));
  }
  r.notes = field<std::vector<std::string>>(j, "notes");
  for (auto const& s : array_field(j, "sub_verdicts")) {
    r.sub_verdicts.push_back(sub_verdict_from_json(s));
  }
  return r;
}

ScanRow scan_row_from_json(Json const& j) {
  ScanRow row;
  row.group_id           = field<std::string>(j, "group_id");
  row.order              = field<std::size_t>(j, "order");
  row.a_rep              = field<index_t>(j, "a_rep");
  row.b_rep              = field<index_t>(j, "b_rep");
  row.a_name             = field<std::string>(j, "a_name");
  row.b_name             = field<std::string>(j, "b_name");
  row.a_class_size       = field<std::size_t>(j, "a_class_size");
  row.eta                = field<std::size_t>(j, "eta");
  row.equal_centralizers = field<bool>(j, "equal_centralizers");
  row.homogeneous        = field<bool>(j, "homogeneous");
  Json const& f          = j.at("flags");
  row.flags.nilpotent         = field<bool>(f, "nilpotent");
  row.flags.supersolvable     = field<bool>(f, "supersolvable");
  row.flags.simple_nonabelian = field<bool>(f, "simple_nonabelian");
  row.flags.odd_order         = field<bool>(f, "odd_order");
  row.flags.p_group           = field<bool>(f, "p_group");
  return row;
}

std::string to_json_lines(std::vector<ScanRow> const& rows) {
  std::string out;
  for (auto const& row : rows) {
    out += to_json(row).dump();
    out += '\n';
  }
  return out;
}

std::vector<ScanRow> scan_rows_from_json_lines(std::string const& text) {
  std::vector<ScanRow> rows;
  std::istringstream   in(text);
  std::string          line;
  std::size_t          number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      continue;
    }
    Json j;
    try {
      j = Json::parse(line);
    } catch (nlohmann::json::exception const& e) {
      throw ParseError("line " + std::to_string(number) + ": " + e.what());
    }
    if (!j.is_object()) {
      throw ParseError("line " + std::to_string(number) + ": not an object");
    }
    rows.push_back(scan_row_from_json(j));
  }
  return rows;
}

}  // namespace classprod
