/* Copyright 2026 The Percept Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "percept/image/io.hpp"

#include <fstream>
#include <string>

#include "percept/error.hpp"

namespace percept {
namespace {

// Reads one whitespace-delimited header token, skipping '#' comments.
std::string next_token(std::istream& in) {
  std::string token;
  int c = in.get();
  while (c != EOF && (std::isspace(c) || c == '#')) {
    if (c == '#') {
      while (c != EOF && c != '\n') c = in.get();
    }
    c = in.get();
  }
  while (c != EOF && !std::isspace(c)) {
    token.push_back(static_cast<char>(c));
    c = in.get();
  }
  return token;
}

int parse_positive_int(const std::string& token, const char* what) {
  if (token.empty()) throw Error(ErrorCode::kCorruptHeader, std::string("missing ") + what);
  std::size_t consumed = 0;
  int value = 0;
  try {
    value = std::stoi(token, &consumed);
  } catch (const std::exception&) {
    throw Error(ErrorCode::kCorruptHeader, std::string("bad ") + what + " '" + token + "'");
  }
  if (consumed != token.size() || value < 1)
    throw Error(ErrorCode::kCorruptHeader, std::string("bad ") + what + " '" + token + "'");
  return value;
}

}  // namespace

ImageU8 load_image(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kFileNotFound, "cannot open " + path.string());

  char magic[2] = {0, 0};
  in.read(magic, 2);
  if (!in || magic[0] != 'P')
    throw Error(ErrorCode::kUnsupportedFormat, path.string() + " is not a PPM file");
  if (magic[1] != '6')
    throw Error(ErrorCode::kUnsupportedFormat,
                path.string() + ": only binary P6 is supported");

  const int width = parse_positive_int(next_token(in), "width");
  const int height = parse_positive_int(next_token(in), "height");
  const std::string maxval = next_token(in);
  if (maxval.empty()) throw Error(ErrorCode::kCorruptHeader, "missing maxval");
  if (maxval != "255")
    throw Error(ErrorCode::kUnsupportedFormat, "maxval " + maxval + " not supported (only 255)");
  // next_token consumed exactly one whitespace byte after the maxval.

  ImageU8 image(width, height);
  in.read(reinterpret_cast<char*>(image.pixels.data()),
          static_cast<std::streamsize>(image.pixels.size()));
  if (static_cast<std::size_t>(in.gcount()) != image.pixels.size())
    throw Error(ErrorCode::kCorruptHeader, path.string() + ": truncated pixel data");
  return image;
}

void save_image(const ImageU8& image, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kFileNotFound, "cannot write " + path.string());
  out << "P6\n" << image.width << " " << image.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(image.pixels.data()),
            static_cast<std::streamsize>(image.pixels.size()));
  if (!out) throw Error(ErrorCode::kFileNotFound, "write failed for " + path.string());
}

}  // namespace percept
