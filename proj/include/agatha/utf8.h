// Copyright 2026 The Agatha Pipeline Authors.
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

#ifndef AGATHA_UTF8_H_
#define AGATHA_UTF8_H_

#include <string>
#include <string_view>

// Minimal UTF-8 helpers. Case mapping covers ASCII, Latin-1, Latin
// Extended-A, basic Greek and basic Cyrillic, which is what Portuguese,
// Spanish and English input needs.
namespace agatha::utf8 {

// Invalid sequences decode to U+FFFD.
std::u32string Decode(std::string_view text);
std::string Encode(std::u32string_view text);
void Append(char32_t c, std::string *out);

char32_t ToLower(char32_t c);
std::string ToLower(std::string_view text);
bool IsLower(std::string_view text);

bool IsSpace(char32_t c);
bool IsDigit(char32_t c);
bool IsLetter(char32_t c);
bool IsPunct(char32_t c);

// Removes leading and trailing punctuation and whitespace.
std::string StripPunct(std::string_view text);

// Number of code points.
size_t Length(std::string_view text);

}  // namespace agatha::utf8

#endif  // AGATHA_UTF8_H_
