#include "hyperres/betti.hpp"

#include <sstream>

#include "hyperres/errors.hpp"

namespace hyperres {

TwistCounts twist_counts(const std::vector<int>& twists) {
  TwistCounts c;
  for (int t : twists) ++c[t];
  return c;
}

std::vector<int> counts_to_twists(const TwistCounts& c) {
  std::vector<int> out;
  for (const auto& [t, m] : c)
    for (int k = 0; k < m; ++k) out.push_back(t);
  return out;
}

std::string counts_to_string(const TwistCounts& c) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, m] : c) {
    if (!first) os << ' ';
    first = false;
    os << t << ':' << m;
  }
  return os.str();
}

TwistCounts parse_counts(const std::string& s) {
  TwistCounts c;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) {
    std::size_t colon = tok.find(':');
    if (colon == std::string::npos)
      fail(errc::syntax_error, "expected twist:count, got '" + tok + "'");
    try {
      int t = std::stoi(tok.substr(0, colon));
      int m = std::stoi(tok.substr(colon + 1));
      if (m <= 0) fail(errc::invalid_argument, "count must be positive");
      c[t] += m;
    } catch (const AlgebraError&) {
      throw;
    } catch (const std::exception&) {
      fail(errc::syntax_error, "bad twist:count token '" + tok + "'");
    }
  }
  return c;
}

int BettiTable::total_rank(std::size_t i) const {
  int n = 0;
  for (const auto& [t, m] : rows_[i]) n += m;
  return n;
}

std::string BettiTable::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    os << i << ": " << counts_to_string(rows_[i]);
    if (i + 1 < rows_.size()) os << '\n';
  }
  return os.str();
}

} // namespace hyperres
