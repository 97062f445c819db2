#pragma once

#include <map>
#include <string>
#include <vector>

namespace hyperres {

// twist -> multiplicity for one homological position
using TwistCounts = std::map<int, int>;

TwistCounts twist_counts(const std::vector<int>& twists);
std::vector<int> counts_to_twists(const TwistCounts& c); // sorted, with multiplicity
std::string counts_to_string(const TwistCounts& c);      // "8:3 9:1"
TwistCounts parse_counts(const std::string& s);          // inverse of the above

// Graded Betti numbers of a resolution prefix: row i lists the twists of the
// rank-beta_i free module in homological position i.
class BettiTable {
public:
  BettiTable() = default;
  explicit BettiTable(std::vector<TwistCounts> rows) : rows_(std::move(rows)) {}

  std::size_t positions() const { return rows_.size(); }
  const TwistCounts& row(std::size_t i) const { return rows_[i]; }
  const std::vector<TwistCounts>& rows() const { return rows_; }
  void push_row(TwistCounts c) { rows_.push_back(std::move(c)); }

  int total_rank(std::size_t i) const;
  std::string to_string() const; // "i: t:m t:m" per line

  bool operator==(const BettiTable& o) const = default;

private:
  std::vector<TwistCounts> rows_;
};

} // namespace hyperres
