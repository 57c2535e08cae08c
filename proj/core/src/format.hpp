// Copyright 2026 The lightcone authors
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

#ifndef LIGHTCONE_SRC_FORMAT_HPP_
#define LIGHTCONE_SRC_FORMAT_HPP_

#include <charconv>
#include <string>

namespace lightcone {

// 12 significant digits, '.' decimal separator; locale-free so CSV output is
// byte-stable.
inline std::string format_sig12(double value) {
  char buf[48];
  const auto result = std::to_chars(buf, buf + sizeof(buf), value,
                                    std::chars_format::general, 12);
  return std::string(buf, result.ptr);
}

}  // namespace lightcone

#endif  // LIGHTCONE_SRC_FORMAT_HPP_
