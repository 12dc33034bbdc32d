#include "kayles/octal.hpp"

#include <algorithm>
#include <cctype>

#include "kayles/error.hpp"

namespace kayles {

OctalCode OctalCode::parse(std::string_view text) {
  if (text.size() < 3 || text.substr(0, 2) != "0.") {
    throw Error(ErrorKind::Parse, "octal code must look like 0.137");
  }
  OctalCode code;
  for (char c : text.substr(2)) {
    if (c < '0' || c > '7') {
      throw Error(ErrorKind::Parse, "bad octal digit '" + std::string(1, c) + "'");
    }
    code.digits_.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  while (!code.digits_.empty() && code.digits_.back() == 0) code.digits_.pop_back();
  if (code.digits_.empty()) throw Error(ErrorKind::Parse, "octal code has no moves");
  return code;
}

std::string OctalCode::str() const {
  std::string out = "0.";
  for (auto d : digits_) out += static_cast<char>('0' + d);
  return out;
}

ValueSequence octal_grundy(const OctalCode& code, std::size_t n) {
  ValueSequence seq{"octal " + code.str(), {}};
  seq.values.reserve(n + 1);
  std::vector<std::uint32_t> g;
  g.reserve(n + 1);
  std::vector<char> seen;
  for (std::size_t h = 0; h <= n; ++h) {
    seen.assign(seen.size(), 0);
    auto mark = [&](std::uint32_t v) {
      if (v >= seen.size()) seen.resize(v + 1, 0);
      seen[v] = 1;
    };
    for (std::size_t k = 1; k <= code.digits().size() && k <= h; ++k) {
      auto d = code.digits()[k - 1];
      std::size_t rest = h - k;
      if ((d & 1) && rest == 0) mark(0);
      if ((d & 2) && rest > 0) mark(g[rest]);
      if ((d & 4) && rest >= 2) {
        for (std::size_t a = 1; a <= rest / 2; ++a) mark(g[a] ^ g[rest - a]);
      }
    }
    std::uint32_t m = 0;
    while (m < seen.size() && seen[m]) ++m;
    g.push_back(m);
    seq.values.push_back(GameValue::nat(m));
  }
  return seq;
}

bool guy_smith_check(const ValueSequence& seq, std::size_t period, std::size_t preperiod,
                     std::size_t slack) {
  if (period == 0) throw Error(ErrorKind::InsufficientData, "period must be positive");
  std::size_t last = 2 * preperiod + period + slack;
  if (seq.size() <= last + period) {
    throw Error(ErrorKind::InsufficientData,
                "need " + std::to_string(last + period + 1) + " values, have " +
                    std::to_string(seq.size()));
  }
  for (std::size_t i = preperiod; i <= last; ++i) {
    if (!(seq[i + period] == seq[i])) return false;
  }
  return true;
}

std::optional<PeriodDescriptor> detect_period(const ValueSequence& seq, std::size_t max_period,
                                              std::size_t slack) {
  std::optional<PeriodDescriptor> best;
  const std::size_t n = seq.size();
  std::vector<std::size_t> mismatches;  // prefix counts
  for (std::size_t p = 1; p <= max_period; ++p) {
    // Smallest window needs index 2p + slack.
    if (2 * p + slack >= n) break;
    mismatches.assign(n - p + 1, 0);
    for (std::size_t i = 0; i + p < n; ++i) {
      mismatches[i + 1] = mismatches[i] + (seq[i + p] == seq[i] ? 0 : 1);
    }
    for (std::size_t q = 0; 2 * q + 2 * p + slack < n; ++q) {
      if (best && q >= best->preperiod) break;
      std::size_t hi = 2 * q + p + slack;
      if (mismatches[hi + 1] - mismatches[q] == 0) {
        best = PeriodDescriptor{q, p};
        break;
      }
    }
  }
  return best;
}

bool PeriodicSequence::certify(std::size_t period, std::size_t preperiod, std::size_t slack) {
  if (!guy_smith_check(seq_, period, preperiod, slack)) return false;
  period_ = PeriodDescriptor{preperiod, period};
  return true;
}

GameValue PeriodicSequence::at(std::size_t n) const {
  if (n < seq_.size()) return seq_.values[n];
  if (!period_) {
    throw Error(ErrorKind::InsufficientData,
                seq_.kind + " computed only up to " + std::to_string(seq_.size() - 1));
  }
  return seq_.values[period_->preperiod + (n - period_->preperiod) % period_->period];
}

void write_csv(std::ostream& out, const ValueSequence& seq) {
  out << "n,value\n";
  for (std::size_t i = 0; i < seq.size(); ++i) out << i << ',' << seq[i].str() << '\n';
}

}  // namespace kayles
