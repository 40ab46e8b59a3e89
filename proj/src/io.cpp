#include "lpo/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lpo {

namespace {

[[noreturn]] void parse_fail(const std::string& source, long long line, long long col,
                             const std::string& msg) {
  std::ostringstream os;
  os << source << ":" << line << ":" << col << ": " << msg;
  throw std::runtime_error(os.str());
}

SignSeq parse_sign_token(const std::string& tok, const std::string& source,
                         long long line, long long col0) {
  for (size_t i = 0; i < tok.size(); ++i)
    if (tok[i] != '-' && tok[i] != '+')
      parse_fail(source, line, col0 + static_cast<long long>(i),
                 std::string("invalid character '") + tok[i] + "' in sign string");
  if (tok.empty() || tok.size() % 2 == 0)
    parse_fail(source, line, col0, "sign string length must be odd");
  return SignSeq::parse(tok);
}

}  // namespace

std::vector<LoadedLine> parse_sequences(const std::string& text, const std::string& source) {
  std::vector<LoadedLine> out;
  std::istringstream in(text);
  std::string line;
  long long ln = 0;
  while (std::getline(in, line)) {
    ++ln;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    if (line[first] == '{') {
      nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
      if (j.is_discarded())
        parse_fail(source, ln, static_cast<long long>(first) + 1, "malformed JSON record");
      try {
        auto rec = record_from_json(j);
        out.push_back({rec.u, rec.v, ln});
      } catch (const std::exception& e) {
        parse_fail(source, ln, static_cast<long long>(first) + 1, e.what());
      }
      continue;
    }
    // whitespace-separated sign strings: one sequence or a pair
    std::vector<std::pair<std::string, size_t>> toks;
    size_t pos = first;
    while (pos < line.size()) {
      const size_t end = line.find_first_of(" \t", pos);
      const size_t stop = end == std::string::npos ? line.size() : end;
      if (stop > pos) toks.push_back({line.substr(pos, stop - pos), pos});
      pos = line.find_first_not_of(" \t", stop);
      if (pos == std::string::npos) break;
    }
    if (toks.size() != 1 && toks.size() != 2)
      parse_fail(source, ln, 1, "expected one or two sign strings per line");
    SignSeq u = parse_sign_token(toks[0].first, source, ln,
                                 static_cast<long long>(toks[0].second) + 1);
    LoadedLine entry{u, std::nullopt, ln};
    if (toks.size() == 2) {
      SignSeq v = parse_sign_token(toks[1].first, source, ln,
                                   static_cast<long long>(toks[1].second) + 1);
      if (v.ell() != u.ell())
        parse_fail(source, ln, static_cast<long long>(toks[1].second) + 1,
                   "pair members must have equal length");
      entry.v = v;
    }
    out.push_back(std::move(entry));
  }
  return out;
}

std::vector<LoadedLine> load_sequences(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_sequences(buf.str(), path);
}

nlohmann::json record_json(const LegendrePairRecord& rec) {
  return {{"ell", rec.ell},
          {"u", rec.u.str()},
          {"v", rec.v.str()},
          {"paf_u", rec.paf_u},
          {"paf_v", rec.paf_v},
          {"canonical", rec.canonical}};
}

LegendrePairRecord record_from_json(const nlohmann::json& j) {
  const SignSeq u = SignSeq::parse(j.at("u").get<std::string>());
  const SignSeq v = SignSeq::parse(j.at("v").get<std::string>());
  auto val = validate_lp(u, v);
  if (!val.ok()) throw std::runtime_error("record is not a Legendre pair: " + val.reason);
  LegendrePairRecord rec = std::move(*val.record);
  if (j.contains("ell") && j.at("ell").get<long long>() != rec.ell)
    throw std::runtime_error("record ell does not match sequence length");
  if (j.contains("canonical")) rec.canonical = j.at("canonical").get<bool>();
  return rec;
}

nlohmann::json dim_report_json(const DimReport& r) {
  nlohmann::json bounds{{"psd_lower", r.bounds.psd_lower}};
  if (r.bounds.ingleton_base) bounds["ingleton"] = *r.bounds.ingleton_base;
  if (r.bounds.ingleton_improved) bounds["ingleton_improved"] = *r.bounds.ingleton_improved;
  return {{"ell", r.ell},
          {"group", r.group == GroupKind::cyclic ? "cyclic" : "affine"},
          {"T", r.T},
          {"dim", r.dim_formula},
          {"dim_rank_check", r.dim_rank},
          {"agrees", r.agrees},
          {"bounds", bounds}};
}

nlohmann::json main0_json(const Main0Report& r) {
  return {{"ell", r.ell},   {"U1", r.U1},       {"U2", r.U2},
          {"disjoint", r.disjoint}, {"dim_u", r.dim_u}, {"dim_v", r.dim_v},
          {"is_lp", r.is_lp}};
}

nlohmann::json feasible_json(const FeasibleDimReport& r) {
  nlohmann::json j{{"ell", r.ell}, {"pair_count", r.pair_count}};
  if (r.dim)
    j["dim"] = *r.dim;
  else
    j["dim"] = nullptr;
  return j;
}

nlohmann::json compression_profile_json(const CompressionProfile& r) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : r.entries)
    entries.push_back({{"d", e.d},
                       {"norm_u", e.norm_u.get_str()},
                       {"norm_v", e.norm_v.get_str()},
                       {"in_tprime", e.in_tprime}});
  nlohmann::json j{{"ell", r.ell},
                   {"entries", entries},
                   {"dim_u", r.dim_u},
                   {"dim_v", r.dim_v},
                   {"tprime_bound", r.tprime_bound},
                   {"bounds_hold", r.bounds_hold},
                   {"goal_positive", r.goal_positive}};
  if (r.phi_bound) j["phi_bound"] = *r.phi_bound;
  if (r.kris_bound) j["kris_bound"] = *r.kris_bound;
  return j;
}

}  // namespace lpo
