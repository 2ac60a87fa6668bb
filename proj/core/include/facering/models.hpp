#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "facering/charclass.hpp"
#include "facering/face_ring.hpp"

namespace facering {

/// A face complex together with the optional torus and characteristic
/// class data that ship with it.
struct Model {
  FaceComplex complex;
  std::optional<TorusData> torus;
  std::optional<CharClassData> chars;
};

/// Raised when a model parses but fails validate_complex.
class ValidationError : public Error {
 public:
  explicit ValidationError(ComplexReport report, const std::string& rendered)
      : Error("model failed validation:\n" + rendered), report_(std::move(report)) {}
  const ComplexReport& report() const { return report_; }

 private:
  ComplexReport report_;
};

/// Incremental construction of a FaceComplex by face name.
class ComplexBuilder {
 public:
  ComplexBuilder(Field field, int m) : field_(field), m_(m) {}

  /// Face with the cohomology of a point.
  ComplexBuilder& face(std::string name, int codim, Label label);
  ComplexBuilder& face(std::string name, int codim, Label label, GradedAlgebra algebra);

  /// Cover lower < upper. The restriction sends each basis element to the
  /// target basis element of the same name, or to zero if there is none.
  ComplexBuilder& cover(const std::string& lower, const std::string& upper);
  ComplexBuilder& cover(const std::string& lower, const std::string& upper,
                        std::vector<std::optional<AlgebraElement>> images);
  /// Cover without restriction data.
  ComplexBuilder& bare_cover(const std::string& lower, const std::string& upper);

  const Field& field() const { return field_; }
  FaceComplex build() const;

 private:
  struct PendingCover {
    std::string lower, upper;
    bool has_map;
    bool by_name;
    std::vector<std::optional<AlgebraElement>> images;
  };
  FaceId id(const std::string& name) const;

  Field field_;
  int m_;
  std::vector<Face> faces_;
  std::vector<std::shared_ptr<const GradedAlgebra>> algebras_;
  std::vector<PendingCover> covers_;
};

std::vector<std::string> builtin_names();

/// bigon, triangle, square, rp2-no-boundary, connected-sum. The field
/// defaults to Q (F2 for rp2-no-boundary, which accepts nothing else).
/// Throws UnknownModel.
Model build_builtin(std::string_view name, std::optional<Field> field = std::nullopt);

/// Canonical JSON (sorted keys, two-space indent, trailing newline).
std::string serialize_model(const Model& model);
/// Throws ParseError with a JSON path, or ValidationError.
Model parse_model(std::string_view text);
Model load_model(const std::filesystem::path& path);
void save_model(const Model& model, const std::filesystem::path& path);

std::string serialize_element(const FaceComplex& c, const RingElement& a);
RingElement parse_element(const FaceComplex& c, std::string_view text);
RingElement load_element(const FaceComplex& c, const std::filesystem::path& path);
void save_element(const FaceComplex& c, const RingElement& a, const std::filesystem::path& path);

}  // namespace facering
