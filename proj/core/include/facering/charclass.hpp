#pragma once

#include <optional>

#include "facering/face_ring.hpp"

namespace facering {

/// Total Stiefel-Whitney and Pontrjagin classes of the free part of the
/// orbit space, as elements of H*(Q). Either may be absent.
struct CharClassData {
  std::optional<AlgebraElement> sw;
  std::optional<AlgebraElement> pont;

  friend bool operator==(const CharClassData&, const CharClassData&) = default;
};

/// Throws ShapeMismatch on wrong lengths and DegreeMismatch when a total
/// class does not start with 1 in degree 0.
void validate_char_data(const FaceComplex& c, const CharClassData& data);

/// w(Q) * (1 + tau_1) ... (1 + tau_m). Requires characteristic 2.
RingElement sw_total(const FaceComplex& c, const CharClassData& data);

/// p(Q) * (1 + tau_1^2) ... (1 + tau_m^2). Any field.
RingElement pontrjagin_total(const FaceComplex& c, const CharClassData& data);

/// (cls restricted to F) * prod_{i in label(F)} (1 + x_i^power), the
/// expected F-component of a total class built from cls.
Polynomial expected_total_component(const FaceComplex& c, const AlgebraElement& cls, FaceId f,
                                    int power);

}  // namespace facering
