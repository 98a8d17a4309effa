#include "baryassoc/ring.hpp"

#include <utility>

#include "baryassoc/error.hpp"

namespace baryassoc {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::MissingAssignment: return "MissingAssignment";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::NotConstant: return "NotConstant";
    case ErrorCode::DeltaNotInvertible: return "DeltaNotInvertible";
    case ErrorCode::TailLengthMismatch: return "TailLengthMismatch";
    case ErrorCode::DegreeTooLow: return "DegreeTooLow";
    case ErrorCode::ArityOutOfRange: return "ArityOutOfRange";
    case ErrorCode::ConstantMember: return "ConstantMember";
    case ErrorCode::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
  }
  return "Unknown";
}

bool is_field(RingId ring) {
  return ring == RingId::Rat || ring == RingId::GaussRat;
}

RingId fraction_field(RingId ring) {
  switch (ring) {
    case RingId::Int: return RingId::Rat;
    case RingId::GaussInt: return RingId::GaussRat;
    default: return ring;
  }
}

bool contains(RingId ring, RingId sub) {
  if (ring == sub || sub == RingId::Int) return true;
  return ring == RingId::GaussRat;
}

std::string_view ring_name(RingId ring) {
  switch (ring) {
    case RingId::Int: return "int";
    case RingId::Rat: return "rat";
    case RingId::GaussInt: return "gaussint";
    case RingId::GaussRat: return "gaussrat";
  }
  return "?";
}

std::optional<RingId> parse_ring_name(std::string_view name) {
  for (RingId r : {RingId::Int, RingId::Rat, RingId::GaussInt, RingId::GaussRat}) {
    if (ring_name(r) == name) return r;
  }
  return std::nullopt;
}

namespace {

bool is_gaussian(RingId ring) {
  return ring == RingId::GaussInt || ring == RingId::GaussRat;
}

bool is_integral(const mpq_class& q) { return q.get_den() == 1; }

bool admissible(RingId ring, const mpq_class& re, const mpq_class& im) {
  if (!is_gaussian(ring) && sgn(im) != 0) return false;
  if (!is_field(ring) && !(is_integral(re) && is_integral(im))) return false;
  return true;
}

void require_same_ring(const RingValue& a, const RingValue& b) {
  if (a.ring() != b.ring()) {
    throw Error(ErrorCode::RingMismatch,
                "ring mismatch: " + std::string(ring_name(a.ring())) + " vs " +
                    std::string(ring_name(b.ring())));
  }
}

}  // namespace

RingValue::RingValue() : ring_(RingId::Int), re_(0), im_(0) {}

RingValue::RingValue(RingId ring, mpq_class re, mpq_class im)
    : ring_(ring), re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
  if (!admissible(ring_, re_, im_)) {
    throw Error(ErrorCode::InvalidArgument,
                "value is not an element of ring " + std::string(ring_name(ring)));
  }
}

RingValue RingValue::imaginary_unit(RingId ring) { return RingValue(ring, 0, 1); }

RingValue RingValue::operator-() const {
  RingValue out = *this;
  out.re_ = -re_;
  out.im_ = -im_;
  return out;
}

RingValue& RingValue::operator+=(const RingValue& rhs) {
  require_same_ring(*this, rhs);
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

RingValue& RingValue::operator-=(const RingValue& rhs) {
  require_same_ring(*this, rhs);
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

RingValue& RingValue::operator*=(const RingValue& rhs) {
  require_same_ring(*this, rhs);
  if (sgn(im_) == 0 && sgn(rhs.im_) == 0) {
    re_ *= rhs.re_;
    return *this;
  }
  mpq_class re = re_ * rhs.re_ - im_ * rhs.im_;
  mpq_class im = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string RingValue::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string imag;
  if (im_ == 1) {
    imag = "i";
  } else if (im_ == -1) {
    imag = "-i";
  } else {
    imag = im_.get_str() + "i";
  }
  if (sgn(re_) == 0) return imag;
  return re_.get_str() + (sgn(im_) > 0 ? "+" : "") + imag;
}

RingValue add(const RingValue& a, const RingValue& b) { return a + b; }
RingValue mul(const RingValue& a, const RingValue& b) { return a * b; }

RingValue pow(RingValue base, unsigned exponent) {
  RingValue acc = RingValue::one(base.ring());
  while (exponent > 0) {
    if (exponent & 1U) acc *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return acc;
}

bool is_unit(const RingValue& a) {
  if (a.is_zero()) return false;
  switch (a.ring()) {
    case RingId::Int:
      return abs(a.real()) == 1;
    case RingId::GaussInt:
      // Norm a^2 + b^2 equals 1 exactly for +-1, +-i.
      return a.real() * a.real() + a.imag() * a.imag() == 1;
    default:
      return true;
  }
}

std::optional<RingValue> try_invert(const RingValue& a) {
  if (!is_unit(a)) return std::nullopt;
  mpq_class norm = a.real() * a.real() + a.imag() * a.imag();
  return RingValue(a.ring(), a.real() / norm, -a.imag() / norm);
}

RingValue embed_in_fraction_field(const RingValue& a) {
  return RingValue(fraction_field(a.ring()), a.real(), a.imag());
}

bool is_in_base_ring(const RingValue& a, RingId target) {
  return admissible(target, a.real(), a.imag());
}

RingValue descend(const RingValue& a, RingId target) {
  return RingValue(target, a.real(), a.imag());
}

RingValue embed(const RingValue& a, RingId ring) {
  if (!contains(ring, a.ring())) {
    throw Error(ErrorCode::RingMismatch,
                "cannot embed " + std::string(ring_name(a.ring())) + " into " +
                    std::string(ring_name(ring)));
  }
  return RingValue(ring, a.real(), a.imag());
}

}  // namespace baryassoc
