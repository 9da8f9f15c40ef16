// Copyright 2026 The Alibi Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ALIBI_ERROR_HPP_
#define ALIBI_ERROR_HPP_

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace alibi {

// Base class for every error raised by the library. The module tag is
// prepended to the message so CLI output is module-qualified.
class Error : public std::runtime_error {
 public:
  Error(std::string module, const std::string& what)
      : std::runtime_error(module + ": " + what), module_(std::move(module)) {}

  const std::string& module() const { return module_; }

 private:
  std::string module_;
};

// A record or document failed schema validation. Carries the location
// (file, record index, field) so the CLI can point at the offending spot.
class DatasetError : public Error {
 public:
  DatasetError(std::string file, std::optional<std::size_t> record,
               std::string field, std::string reason)
      : Error("core-model", Format(file, record, field, reason)),
        file_(std::move(file)),
        record_(record),
        field_(std::move(field)),
        reason_(std::move(reason)) {}

  const std::string& file() const { return file_; }
  std::optional<std::size_t> record() const { return record_; }
  const std::string& field() const { return field_; }
  const std::string& reason() const { return reason_; }

 private:
  static std::string Format(const std::string& file,
                            std::optional<std::size_t> record,
                            const std::string& field,
                            const std::string& reason) {
    std::ostringstream os;
    if (!file.empty()) os << file << ": ";
    if (record) os << "record " << *record << ": ";
    if (!field.empty()) os << "field '" << field << "': ";
    os << reason;
    return os.str();
  }

  std::string file_;
  std::optional<std::size_t> record_;
  std::string field_;
  std::string reason_;
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error("similarity", what) {}
};

// Hard clauses admit no model. `core` holds indices into the problem's hard
// clause list forming an unsatisfiable subset.
class UnsatError : public Error {
 public:
  explicit UnsatError(std::vector<std::size_t> core)
      : Error("consistency", Describe(core)), core_(std::move(core)) {}

  const std::vector<std::size_t>& core() const { return core_; }

 private:
  static std::string Describe(const std::vector<std::size_t>& core) {
    std::ostringstream os;
    os << "no consistent repair: unsatisfiable core over hard clauses {";
    for (std::size_t i = 0; i < core.size(); ++i) {
      os << (i ? ", " : "") << core[i];
    }
    os << "}";
    return os.str();
  }

  std::vector<std::size_t> core_;
};

class GenerationError : public Error {
 public:
  GenerationError(std::string module, const std::string& what)
      : Error(std::move(module), what) {}
};

class UnsupportedError : public Error {
 public:
  UnsupportedError(std::string module, const std::string& what)
      : Error(std::move(module), "unsupported: " + what) {}
};

}  // namespace alibi

#endif  // ALIBI_ERROR_HPP_
