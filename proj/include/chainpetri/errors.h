// Copyright 2026 The chainpetri Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chainpetri {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Mutation of a sealed net, or analysis of an unsealed one.
class LifecycleError : public Error {
 public:
  using Error::Error;
};

// Place or transition index outside the net.
class IndexError : public Error {
 public:
  using Error::Error;
};

// A transaction that cannot be recorded (e.g. no outputs, empty address).
class MalformedTransactionError : public Error {
 public:
  using Error::Error;
};

class DuplicateTransactionError : public Error {
 public:
  explicit DuplicateTransactionError(const std::string& tx_id)
      : Error("duplicate transaction id '" + tx_id + "'"), tx_id_(tx_id) {}
  const std::string& tx_id() const { return tx_id_; }

 private:
  std::string tx_id_;
};

// Snapshot could not be decoded. section() names the offending part of
// the document ("json", "version", "places", "pre", ...).
class SnapshotError : public Error {
 public:
  SnapshotError(std::string section, const std::string& what)
      : Error("snapshot " + section + ": " + what),
        section_(std::move(section)) {}
  const std::string& section() const { return section_; }

 private:
  std::string section_;
};

// Input text is not well-formed JSON.
class ParseError : public Error {
 public:
  ParseError(std::size_t byte_offset, const std::string& what)
      : Error("parse error at byte " + std::to_string(byte_offset) + ": " +
              what),
        byte_offset_(byte_offset) {}
  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

// Well-formed JSON that violates the block schema. tx_id() is empty when
// the violation is at block level.
class ValidationError : public Error {
 public:
  ValidationError(std::string tx_id, const std::string& what)
      : Error(tx_id.empty() ? what : "transaction '" + tx_id + "': " + what),
        tx_id_(std::move(tx_id)) {}
  const std::string& tx_id() const { return tx_id_; }

 private:
  std::string tx_id_;
};

// Blocks fed out of height order.
class OrderingError : public Error {
 public:
  using Error::Error;
};

// Contradictory synthetic generator configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A partition that does not belong to the net it is applied to.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

// Successor structure among disposable transactions is cyclic.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

// Argument outside an operation's mathematical domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace chainpetri
