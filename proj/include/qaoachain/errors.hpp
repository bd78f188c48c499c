// Copyright 2026 The qaoachain Authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace qaoachain {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid problem instance (empty graph, zero colors, ...).
class ModelError : public Error {
 public:
  using Error::Error;
};

/// Invalid option or parameter combination.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Request exceeds simulator, chain, or chip capacity.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Malformed input document. `location()` is a JSON field path or a
/// `line:column` pair, depending on the format.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::string location)
      : Error(location.empty() ? message : location + ": " + message),
        message_(message),
        location_(std::move(location)) {}

  const std::string& message() const noexcept { return message_; }
  const std::string& location() const noexcept { return location_; }

 private:
  std::string message_;
  std::string location_;
};

class NotFoundError : public Error {
 public:
  using Error::Error;
};

/// A task result was requested before the task completed.
class UnavailableError : public Error {
 public:
  UnavailableError(const std::string& message, std::string status)
      : Error(message), status_(std::move(status)) {}

  const std::string& status() const noexcept { return status_; }

 private:
  std::string status_;
};

}  // namespace qaoachain
