#include "algentropy/stream.hpp"

#include "algentropy/errors.hpp"

namespace algentropy {

CoefficientStream::CoefficientStream(Kind k, std::vector<Rational> data, std::vector<Rational> initial)
    : kind_(k), data_(std::move(data)), initial_(std::move(initial)) {}

CoefficientStream CoefficientStream::constant(const Rational& c) { return CoefficientStream(Kind::constant, {c}); }

CoefficientStream CoefficientStream::polynomial(std::vector<Rational> coeffs) {
  if (coeffs.empty()) coeffs.emplace_back(0);
  return CoefficientStream(Kind::polynomial, std::move(coeffs));
}

CoefficientStream CoefficientStream::periodic(std::vector<Rational> values) {
  if (values.empty()) throw Error("periodic stream needs at least one value");
  return CoefficientStream(Kind::periodic, std::move(values));
}

CoefficientStream CoefficientStream::recurrence(std::vector<Rational> coeffs, std::vector<Rational> initial) {
  if (coeffs.empty() || coeffs.size() != initial.size())
    throw Error("recurrence stream needs r coefficients and r initial values");
  CoefficientStream s(Kind::recurrence, std::move(coeffs), std::move(initial));
  s.memo_ = std::make_shared<Memo>();
  for (std::size_t i = 0; i < s.initial_.size(); ++i) s.memo_->values[static_cast<long>(i)] = s.initial_[i];
  return s;
}

CoefficientStream CoefficientStream::scaled(const Rational& s) const {
  auto times = [&](std::vector<Rational> v) {
    for (auto& x : v) x *= s;
    return v;
  };
  switch (kind_) {
    case Kind::constant: return constant(data_[0] * s);
    case Kind::polynomial: return polynomial(times(data_));
    case Kind::periodic: return periodic(times(data_));
    case Kind::recurrence: break;
  }
  return recurrence(data_, times(initial_));
}

Rational CoefficientStream::at(long n) const {
  switch (kind_) {
    case Kind::constant:
      return data_[0];
    case Kind::polynomial: {
      Rational acc = 0;
      for (auto it = data_.rbegin(); it != data_.rend(); ++it) acc = acc * n + *it;
      return acc;
    }
    case Kind::periodic: {
      const long p = static_cast<long>(data_.size());
      return data_[static_cast<std::size_t>(((n % p) + p) % p)];
    }
    case Kind::recurrence:
      break;
  }
  const long r = static_cast<long>(data_.size());
  std::lock_guard<std::mutex> lock(memo_->mu);
  auto& v = memo_->values;
  if (auto it = v.find(n); it != v.end()) return it->second;
  if (n >= r) {
    for (long k = v.rbegin()->first + 1; k <= n; ++k) {
      Rational acc = 0;
      for (long i = 1; i <= r; ++i) acc += data_[static_cast<std::size_t>(i - 1)] * v.at(k - i);
      v[k] = acc;
    }
  } else {
    // a_{k} = (a_{k+r} - sum_{i<r} c_i a_{k+r-i}) / c_r
    const Rational& last = data_.back();
    if (last == 0) throw Error("recurrence stream cannot be run backwards");
    for (long k = v.begin()->first - 1; k >= n; --k) {
      Rational acc = v.at(k + r);
      for (long i = 1; i < r; ++i) acc -= data_[static_cast<std::size_t>(i - 1)] * v.at(k + r - i);
      v[k] = acc / last;
    }
  }
  return v.at(n);
}

std::string CoefficientStream::kind_name() const {
  switch (kind_) {
    case Kind::constant: return "constant";
    case Kind::polynomial: return "polynomial";
    case Kind::periodic: return "periodic";
    case Kind::recurrence: return "recurrence";
  }
  return "";
}

}  // namespace algentropy
