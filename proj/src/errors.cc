// Copyright 2026 The NoonForge Authors
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


#include "noonforge/errors.h"

#include <iostream>
#include <mutex>

namespace noonforge {

namespace {

std::mutex &handler_mutex() {
    static std::mutex m;
    return m;
}

WarningHandler &handler() {
    static WarningHandler h = [](std::string_view message) { std::cerr << "warning: " << message << '\n'; };
    return h;
}

}  // namespace

void set_warning_handler(WarningHandler h) {
    std::lock_guard<std::mutex> lock(handler_mutex());
    handler() = h ? std::move(h) : [](std::string_view) {};
}

void warn(std::string_view message) {
    std::lock_guard<std::mutex> lock(handler_mutex());
    handler()(message);
}

}  // namespace noonforge
