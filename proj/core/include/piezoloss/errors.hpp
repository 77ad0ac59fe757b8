// Copyright 2026 The piezoloss authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace piezoloss {

/// Base class for all piezoloss exceptions.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Invalid numeric or structural input (bad sign, non-finite value, ...).
class InvalidInputError : public Error {
  public:
    using Error::Error;
};

/// Name not present in a database; carries the list of known names.
class NotFoundError : public Error {
  public:
    NotFoundError(const std::string& what_name, const std::vector<std::string>& available)
        : Error(make_message(what_name, available)), name_(what_name), available_(available)
    {
    }

    const std::string& name() const { return name_; }
    const std::vector<std::string>& available() const { return available_; }

  private:
    static std::string make_message(const std::string& name,
                                    const std::vector<std::string>& available)
    {
        std::string msg = "unknown entry '" + name + "'; available:";
        for (const auto& a : available) {
            msg += ' ';
            msg += a;
        }
        return msg;
    }

    std::string name_;
    std::vector<std::string> available_;
};

/// Inconsistent geometry or device configuration.
class ConfigError : public Error {
  public:
    using Error::Error;
};

/// Requested accuracy could not be reached within the evaluation budget.
class AccuracyError : public Error {
  public:
    AccuracyError(const std::string& msg, double achieved_rel_tol)
        : Error(msg + " (achieved relative tolerance " + std::to_string(achieved_rel_tol) + ")"),
          achieved_(achieved_rel_tol)
    {
    }

    double achieved_rel_tol() const { return achieved_; }

  private:
    double achieved_;
};

/// File read/write failure.
class IoError : public Error {
  public:
    using Error::Error;
};

} // namespace piezoloss
