#include "lsseq/numeration.hpp"

#include <charconv>
#include <type_traits>

#include "lsseq/error.hpp"

namespace lsseq {

namespace {

template <class Int>
std::int64_t to_i64(const Int& value) {
  if constexpr (std::is_integral_v<Int>) {
    return static_cast<std::int64_t>(value);
  } else {
    return value.template convert_to<std::int64_t>();
  }
}

}  // namespace

DigitExpansion DigitExpansion::shifted(std::size_t m) const {
  if (m >= digits_.size()) return DigitExpansion();
  return DigitExpansion(std::vector<Digit>(digits_.begin(), digits_.end() - static_cast<std::ptrdiff_t>(m)));
}

std::string DigitExpansion::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (i) out += ';';
    out += '(' + std::to_string(digits_[i].epsilon) + ',' + std::to_string(digits_[i].eta) + ')';
  }
  return out;
}

DigitExpansion DigitExpansion::parse(std::string_view text) {
  std::vector<Digit> digits;
  auto fail = [&] {
    return Error(ErrorCode::InvalidArgument,
                 "malformed digit expansion '" + std::string(text) + "'");
  };
  auto skip_space = [&](std::size_t& p) {
    while (p < text.size() && (text[p] == ' ' || text[p] == '\t')) ++p;
  };
  std::size_t p = 0;
  skip_space(p);
  while (p < text.size()) {
    if (text[p] != '(') throw fail();
    ++p;
    std::int64_t values[2] = {0, 0};
    for (int f = 0; f < 2; ++f) {
      skip_space(p);
      auto [ptr, ec] = std::from_chars(text.data() + p, text.data() + text.size(), values[f]);
      if (ec != std::errc()) throw fail();
      p = static_cast<std::size_t>(ptr - text.data());
      skip_space(p);
      const char expected = f == 0 ? ',' : ')';
      if (p >= text.size() || text[p] != expected) throw fail();
      ++p;
    }
    if (values[0] != 0 && values[0] != 1) throw fail();
    digits.push_back(Digit{static_cast<int>(values[0]), values[1]});
    skip_space(p);
    if (p < text.size()) {
      if (text[p] != ';') throw fail();
      ++p;
      skip_space(p);
      if (p >= text.size()) throw fail();
    }
  }
  return DigitExpansion(std::move(digits));
}

bool is_valid_expansion(const DigitExpansion& digits, const Params& params) {
  if (digits.empty()) return true;
  if (digits.digits().front().epsilon != 1) return false;
  const std::size_t top = digits.size() - 1;
  const std::int64_t max_eta = params.alphabet() - 2;
  for (std::size_t i = 0; i <= top; ++i) {
    const Digit& d = digits.at_position(i);
    if (d.epsilon != 0 && d.epsilon != 1) return false;
    if (d.eta < 0 || d.eta > max_eta) return false;
    if (d.epsilon == 0 && d.eta != 0) return false;
    if (d.epsilon == 0) continue;
    // only a nonzero digit picks a longer piece
    for (std::size_t m = 1; m + 1 <= params.k() && i + m <= top; ++m) {
      if (d.eta >= params.partial_sum(m) - 1 && digits.at_position(i + m).epsilon != 0) {
        return false;
      }
    }
  }
  return true;
}

template <class Int>
void phi_into(const Int& N, const BasicCountsTable<Int>& counts, std::vector<Digit>& out) {
  out.clear();
  if (N == 0) return;
  const std::size_t n = counts.level_of(N);
  out.resize(n + 1);

  Int rest = N;
  Int weight = counts.t(n);
  Digit digit{1, to_i64(Int((rest - weight) / counts.l(static_cast<std::ptrdiff_t>(n), 1)))};
  out[0] = digit;
  std::size_t zeros = 0;  // consecutive zero eps directly above the current position
  for (std::size_t step = 1; step <= n; ++step) {
    const std::size_t m = n - step;
    const auto above = static_cast<std::ptrdiff_t>(m + 1);
    if (digit.epsilon) {
      rest -= weight + Int(digit.eta) * counts.l(above, 1);
      zeros = 0;
    } else {
      ++zeros;
    }
    weight = counts.head_sum(m, zeros + 2);
    if (rest < weight) {
      digit = Digit{0, 0};
    } else {
      digit = Digit{1, to_i64(Int((rest - weight) / counts.l(static_cast<std::ptrdiff_t>(m), 1)))};
    }
    out[step] = digit;
  }
}

template <class Int>
DigitExpansion phi(const Int& N, const BasicCountsTable<Int>& counts) {
  if constexpr (!std::is_unsigned_v<Int>) {
    if (N < 0) throw Error(ErrorCode::NonPositiveIndex, "phi requires N >= 0");
  }
  std::vector<Digit> digits;
  phi_into(N, counts, digits);
  return DigitExpansion(std::move(digits));
}

template <class Int>
std::vector<Int> position_weights(const DigitExpansion& digits,
                                  const BasicCountsTable<Int>& counts) {
  const std::size_t size = digits.size();
  std::vector<Int> weights(size);
  if (size == 0) return weights;
  const std::size_t top = size - 1;
  weights[top] = counts.t(top);
  std::size_t zeros = 0;
  for (std::size_t i = top; i-- > 0;) {
    zeros = digits.at_position(i + 1).epsilon ? 0 : zeros + 1;
    weights[i] = counts.head_sum(i, zeros + 2);
  }
  return weights;
}

template <class Int>
Int psi(const DigitExpansion& digits, const BasicCountsTable<Int>& counts) {
  if (!is_valid_expansion(digits, counts.params())) {
    throw Error(ErrorCode::InvalidExpansion,
                "not an admissible expansion: " + digits.to_string());
  }
  const std::vector<Int> weights = position_weights(digits, counts);
  Int sum(0);
  for (std::size_t i = 0; i < digits.size(); ++i) {
    const Digit& d = digits.at_position(i);
    if (d.epsilon) sum += weights[i];
    sum += Int(d.eta) * counts.l(static_cast<std::ptrdiff_t>(i), 1);
  }
  return sum;
}

template <class Int>
Int truncated_value(const DigitExpansion& digits, std::size_t m,
                    const BasicCountsTable<Int>& counts) {
  const std::vector<Int> weights = position_weights(digits, counts);
  Int sum(0);
  for (std::size_t i = 0; i < m && i < digits.size(); ++i) {
    const Digit& d = digits.at_position(i);
    if (d.epsilon) sum += weights[i];
    sum += Int(d.eta) * counts.l(static_cast<std::ptrdiff_t>(i), 1);
  }
  return sum;
}

template DigitExpansion phi(const BigInt&, const CountsTable&);
template DigitExpansion phi(const std::uint64_t&, const FastCountsTable&);
template void phi_into(const BigInt&, const CountsTable&, std::vector<Digit>&);
template void phi_into(const std::uint64_t&, const FastCountsTable&, std::vector<Digit>&);
template BigInt psi(const DigitExpansion&, const CountsTable&);
template std::uint64_t psi(const DigitExpansion&, const FastCountsTable&);
template std::vector<BigInt> position_weights(const DigitExpansion&, const CountsTable&);
template std::vector<std::uint64_t> position_weights(const DigitExpansion&, const FastCountsTable&);
template BigInt truncated_value(const DigitExpansion&, std::size_t, const CountsTable&);
template std::uint64_t truncated_value(const DigitExpansion&, std::size_t, const FastCountsTable&);

namespace {

class Enumerator {
 public:
  Enumerator(const Params& params, const std::function<void(const DigitExpansion&)>& visit)
      : params_(params), visit_(visit) {}

  void run(std::size_t length) {
    buffer_.mutable_digits().assign(length, Digit{});
    place(0);
  }

 private:
  // slot 0 is the most significant position.
  void place(std::size_t slot) {
    auto& digits = buffer_.mutable_digits();
    if (slot == digits.size()) {
      visit_(buffer_);
      return;
    }
    const std::size_t top = digits.size() - 1;
    const std::size_t position = top - slot;
    if (slot > 0) {
      digits[slot] = Digit{0, 0};
      place(slot + 1);
    }
    for (std::int64_t eta = 0; eta <= params_.alphabet() - 2; ++eta) {
      if (!admissible(position, eta)) continue;
      digits[slot] = Digit{1, eta};
      place(slot + 1);
    }
  }

  bool admissible(std::size_t position, std::int64_t eta) const {
    const std::size_t top = buffer_.size() - 1;
    for (std::size_t m = 1; m + 1 <= params_.k() && position + m <= top; ++m) {
      if (eta >= params_.partial_sum(m) - 1 &&
          buffer_.digits()[top - position - m].epsilon != 0) {
        return false;
      }
    }
    return true;
  }

  const Params& params_;
  const std::function<void(const DigitExpansion&)>& visit_;
  DigitExpansion buffer_;
};

}  // namespace

void for_each_expansion(const Params& params, std::size_t n_max,
                        const std::function<void(const DigitExpansion&)>& visit) {
  if (n_max > kMaxEnumerationLength) {
    throw Error(ErrorCode::TooLarge, "enumeration length limited to " +
                                         std::to_string(kMaxEnumerationLength));
  }
  Enumerator enumerator(params, visit);
  for (std::size_t length = 1; length <= n_max; ++length) enumerator.run(length);
}

std::vector<DigitExpansion> enumerate_expansions(const Params& params, std::size_t n_max) {
  std::vector<DigitExpansion> out;
  for_each_expansion(params, n_max, [&](const DigitExpansion& d) { out.push_back(d); });
  return out;
}

}  // namespace lsseq
