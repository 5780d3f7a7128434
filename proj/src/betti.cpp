#include "bei/betti.hpp"

#include <algorithm>
#include <sstream>

#include "bei/errors.hpp"

namespace bei {

void BettiTable::add(int i, int j, std::int64_t v) {
  if (v == 0) return;
  auto key = std::pair{i, j};
  auto [it, fresh] = entries.emplace(key, 0);
  it->second += v;
  if (it->second == 0) {
    entries.erase(it);
    return;
  }
  if (it->second < 0) throw ValidationError("negative Betti entry at (" + std::to_string(i) +
                                            "," + std::to_string(j) + ")");
  (void)fresh;
}

int BettiTable::regularity() const {
  int r = 0;
  for (const auto& [k, v] : entries) r = std::max(r, k.second);
  return r;
}

int BettiTable::projective_dimension() const {
  int p = 0;
  for (const auto& [k, v] : entries) p = std::max(p, k.first);
  return p;
}

ZPoly euler_numerator(const BettiTable& t) {
  ZPoly r;
  for (const auto& [k, v] : t.entries) {
    auto [i, j] = k;
    std::size_t d = static_cast<std::size_t>(i + j);
    if (r.size() <= d) r.resize(d + 1, 0);
    if (i % 2 == 0)
      r[d] += v;
    else
      r[d] -= v;
  }
  zp_trim(r);
  return r;
}

BettiTable shift_rows(BettiTable t, int dj) {
  BettiTable out;
  out.nvars = t.nvars;
  for (const auto& [k, v] : t.entries) out.entries[{k.first, k.second + dj}] = v;
  return out;
}

bool leq_entrywise(const BettiTable& a, const BettiTable& b) {
  for (const auto& [k, v] : a.entries)
    if (v > b.at(k.first, k.second)) return false;
  return true;
}

BettiTable max_entrywise(const BettiTable& a, const BettiTable& b) {
  BettiTable out = a;
  out.nvars = std::max(a.nvars, b.nvars);
  for (const auto& [k, v] : b.entries) {
    auto& slot = out.entries[k];
    slot = std::max(slot, v);
  }
  return out;
}

std::vector<std::string> diff_entries(const BettiTable& a, const BettiTable& b) {
  std::vector<std::string> out;
  std::map<std::pair<int, int>, bool> keys;
  for (const auto& [k, v] : a.entries) keys[k] = true;
  for (const auto& [k, v] : b.entries) keys[k] = true;
  for (const auto& [k, unused] : keys) {
    (void)unused;
    std::int64_t va = a.at(k.first, k.second), vb = b.at(k.first, k.second);
    if (va != vb)
      out.push_back("(" + std::to_string(k.first) + "," + std::to_string(k.second) +
                    "): " + std::to_string(va) + " vs " + std::to_string(vb));
  }
  return out;
}

std::string diagram(const BettiTable& t) {
  int pd = t.projective_dimension();
  int reg = t.regularity();
  std::vector<std::size_t> width(pd + 1, 1);
  for (const auto& [k, v] : t.entries)
    width[k.first] = std::max(width[k.first], std::to_string(v).size());
  std::size_t rowlab = std::to_string(reg).size();
  std::ostringstream os;
  os << std::string(rowlab + 2, ' ');
  for (int i = 0; i <= pd; ++i) {
    std::string h = std::to_string(i);
    width[i] = std::max(width[i], h.size());
    os << std::string(width[i] + 1 - h.size(), ' ') << h;
  }
  os << '\n';
  os << std::string(rowlab + 2, ' ');
  std::size_t total = 0;
  for (int i = 0; i <= pd; ++i) total += width[i] + 1;
  os << std::string(total, '-') << '\n';
  for (int j = 0; j <= reg; ++j) {
    std::string lab = std::to_string(j);
    os << std::string(rowlab - lab.size(), ' ') << lab << " |";
    for (int i = 0; i <= pd; ++i) {
      std::int64_t v = t.at(i, j);
      std::string cell = v ? std::to_string(v) : ".";
      os << std::string(width[i] + 1 - cell.size(), ' ') << cell;
    }
    os << '\n';
  }
  return os.str();
}

nlohmann::json betti_to_json(const BettiTable& t) {
  nlohmann::json j;
  auto arr = nlohmann::json::array();
  for (const auto& [k, v] : t.entries) {
    nlohmann::json e;
    e["i"] = k.first;
    e["j"] = k.second;
    e["b"] = v;
    arr.push_back(std::move(e));
  }
  j["entries"] = std::move(arr);
  j["reg"] = t.regularity();
  j["pd"] = t.projective_dimension();
  return j;
}

}  // namespace bei
