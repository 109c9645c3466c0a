// Copyright 2026 The stsynth authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <csetjmp>
#include <cstdio>

#include <jpeglib.h>

#include <algorithm>
#include <string>

#include "sts/io/png_io.hpp"

namespace sts {

namespace detail {

struct JpegErrorMgr {
    jpeg_error_mgr pub;
    std::jmp_buf jump;
};

inline void jpeg_error_exit(j_common_ptr cinfo) {
    JpegErrorMgr* err = reinterpret_cast<JpegErrorMgr*>(cinfo->err);
    longjmp(err->jump, 1);
}

}  // namespace detail

/// Reads a baseline/progressive JPEG as 8-bit RGB.
inline ImageU8 read_jpeg(const std::string& path) {
    detail::FilePtr fp(std::fopen(path.c_str(), "rb"));
    if (!fp) throw IoError("cannot open " + path);
    jpeg_decompress_struct cinfo;
    detail::JpegErrorMgr jerr;
    cinfo.err = jpeg_std_error(&jerr.pub);
    jerr.pub.error_exit = detail::jpeg_error_exit;
    if (setjmp(jerr.jump)) {
        jpeg_destroy_decompress(&cinfo);
        throw IoError("failed to decode " + path);
    }
    jpeg_create_decompress(&cinfo);
    jpeg_stdio_src(&cinfo, fp.get());
    jpeg_read_header(&cinfo, TRUE);
    cinfo.out_color_space = JCS_RGB;
    jpeg_start_decompress(&cinfo);
    ImageU8 img(static_cast<int>(cinfo.output_width),
                static_cast<int>(cinfo.output_height), 3);
    while (cinfo.output_scanline < cinfo.output_height) {
        JSAMPROW row = img.data() + static_cast<size_t>(cinfo.output_scanline) *
                                        cinfo.output_width * 3;
        jpeg_read_scanlines(&cinfo, &row, 1);
    }
    jpeg_finish_decompress(&cinfo);
    jpeg_destroy_decompress(&cinfo);
    return img;
}

inline bool has_suffix_nocase(const std::string& s, const std::string& suffix) {
    if (s.size() < suffix.size()) return false;
    return std::equal(suffix.rbegin(), suffix.rend(), s.rbegin(),
                      [](char a, char b) { return std::tolower(b) == a; });
}

/// Loads an image by extension; the result always has 3 channels.
inline ImageU8 load_image_rgb(const std::string& path) {
    ImageU8 img;
    if (has_suffix_nocase(path, ".jpg") || has_suffix_nocase(path, ".jpeg"))
        img = read_jpeg(path);
    else if (has_suffix_nocase(path, ".png"))
        img = read_png(path);
    else
        throw IoError("unsupported image format: " + path);
    if (img.channels() == 3) return img;
    ImageU8 rgb(img.width(), img.height(), 3);
    for (int y = 0; y < img.height(); ++y)
        for (int x = 0; x < img.width(); ++x)
            for (int c = 0; c < 3; ++c) rgb.at(x, y, c) = img.at(x, y, 0);
    return rgb;
}

}  // namespace sts
