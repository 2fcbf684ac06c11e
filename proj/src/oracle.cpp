#include "advlab/oracle.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "advlab/errors.hpp"

namespace advlab {

bool OracleHandle::query(const Word& w) {
  if (budget_ && transcript_.size() >= *budget_) throw BudgetExhausted(*budget_, w.str());
  const bool answer = membership(language_, w);
  transcript_.push_back({w, answer});
  return answer;
}

Language combine(const Language& left, const Language& right) {
  auto route = [left, right](const Word& w) {
    if (w.empty() || w[0] == Symbol::Sep) return false;
    const Word rest = w.suffix_from(1);
    return w[0] == Symbol::Zero ? left.contains_unchecked(rest) : right.contains_unchecked(rest);
  };
  auto enumerate = [left, right](std::size_t length) {
    std::vector<Word> out;
    if (length == 0) return out;
    auto tag = [&](const Language& part, Symbol bit) {
      if (length - 1 > part.horizon()) return;
      for (const Word& w : members_at(part, length - 1)) out.push_back(Word().with(bit) + w);
    };
    tag(left, Symbol::Zero);
    tag(right, Symbol::One);
    return out;
  };
  const std::size_t horizon = 1 + std::max(left.horizon(), right.horizon());
  return Language::derived("combine(" + left.name() + "," + right.name() + ")", horizon,
                           std::move(route), std::move(enumerate));
}

std::uint64_t combined_bound(const Poly& left_bound, const Poly& right_bound, std::size_t length) {
  if (length == 0) return 0;
  return left_bound(length - 1) + right_bound(length - 1);
}

void write_transcript(std::ostream& out, const Transcript& transcript) {
  for (const auto& record : transcript) {
    out << record.query.str() << '\t' << (record.answer ? '1' : '0') << '\n';
  }
}

Transcript read_transcript(std::istream& in) {
  Transcript transcript;
  std::string line;
  while (std::getline(in, line)) {
    const auto tab = line.find('\t');
    if (tab == std::string::npos || tab + 2 != line.size() ||
        (line[tab + 1] != '0' && line[tab + 1] != '1')) {
      throw std::invalid_argument("malformed transcript line: '" + line + "'");
    }
    transcript.push_back({Word::parse(line.substr(0, tab)), line[tab + 1] == '1'});
  }
  return transcript;
}

bool replay_matches(const Language& language, const Transcript& transcript) {
  return std::all_of(transcript.begin(), transcript.end(), [&](const QueryRecord& r) {
    return membership(language, r.query) == r.answer;
  });
}

}  // namespace advlab
