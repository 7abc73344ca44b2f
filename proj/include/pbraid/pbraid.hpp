#pragma once

#include "pbraid/convex.hpp"
#include "pbraid/derivations.hpp"
#include "pbraid/diagram.hpp"
#include "pbraid/expand.hpp"
#include "pbraid/oracle.hpp"
#include "pbraid/presentations.hpp"
#include "pbraid/smith.hpp"
#include "pbraid/words.hpp"
