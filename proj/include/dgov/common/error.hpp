/*
   Copyright 2026 The dgov Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>

namespace dgov {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Malformed or non-canonical wire bytes.
class DecodeError : public Error {
  public:
    using Error::Error;
};

// Shapes of matrices/vectors do not line up.
class DimensionError : public Error {
  public:
    using Error::Error;
};

// An operation was asked to act outside its domain (zero secret, trust slot with v != 1, ...).
class PreconditionError : public Error {
  public:
    using Error::Error;
};

// Lookup of an absent entry (CAS hash, log index, ...).
class NotFoundError : public Error {
  public:
    using Error::Error;
};

}  // namespace dgov
