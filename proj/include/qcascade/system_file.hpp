#pragma once

// JSON system files. Complex scalars are [re, im] pairs, matrices are
// row-major nested arrays:
//
//   {
//     "schema_version": 1,
//     "n": 2, "m": 1,
//     "F": [[[re, im], [re, im]], ...],
//     "G": ..., "Hbar": ..., "J": ...,
//     "theta": ..., "M": ..., "Lambda": ..., "S": ...   (optional)
//   }
//
// Doubles are written in shortest round-trip form, so save/load is exact.

#include <filesystem>
#include <optional>
#include <string>

#include "qcascade/cascade.hpp"
#include "qcascade/system_model.hpp"

namespace qcascade {

inline constexpr int kSystemSchemaVersion = 1;

struct SystemFile {
  int schema_version = kSystemSchemaVersion;
  StateSpaceSystem system;
  std::optional<CMatrix> theta;
  std::optional<CMatrix> M;
  std::optional<CMatrix> Lambda;
  std::optional<CMatrix> S;
};

std::string serialize_system(const SystemFile& file);
// Throws ParseError naming the byte offset or field path at fault.
SystemFile parse_system(const std::string& text);

void save_system(const std::filesystem::path& path, const SystemFile& file);
SystemFile load_system(const std::filesystem::path& path);

// Cascade report written by `realize`; output only.
std::string serialize_cascade(const CascadeRealization& casc, const CMatrix& J,
                              const CascadeResiduals& residuals);

void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace qcascade
