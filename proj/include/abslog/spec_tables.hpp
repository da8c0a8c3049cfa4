#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "abslog/pcm.hpp"
#include "abslog/spec.hpp"

namespace abslog {

// Quantifier windows for the shipped spec tables. The written contracts
// range over unbounded domains; a table built from one of these structs
// enumerates exactly this finite slice. Windows feed carrier domains and
// witness enumerators; the predicates themselves stay exact, so shrinking
// or widening a window never changes what counts as a correct answer,
// only how much of the space the checker explores.

struct MemSamples {
    std::vector<int64_t> blocks = {0, 1, 2, 3};
    std::vector<int64_t> offsets = {0, 8};
    std::vector<int64_t> cell_values = {0, 1, 2};
    std::vector<int64_t> lengths = {0, 1, 2};
};

struct StackSamples {
    std::vector<int64_t> handle_blocks = {0, 1, 2, 3};
    std::vector<int64_t> elems = {1, 2};
    int64_t max_len = 3;
};

struct RepeatSamples {
    std::vector<int64_t> ns = {0, 1, 2};
    std::vector<int64_t> ms = {0, 3};
};

// main is unconstrained; f maps multiples of four to results that are
// 1 mod 4. Plain value contracts, no resources.
SpecTable hoare_specs();

// fire consumes the caller's Ball token and retires the module resource
// from Ready to Fired; main holds the Ball on entry and gives it up on
// the first shot. One shot total.
SpecTable cannon_specs();
Resource cannon_sigma();  // Cannon's module resource; Main's stays unit

// Allocator with a points-to interface; the module resource is the cell
// authority. alloc extends it with fresh cells, store rewrites one cell,
// free retires one, load leaves it untouched.
SpecTable mem_specs(const MemSamples& w = {});
Resource mem_sigma();

// Handle values shared between stack windows and the pool machine.
std::vector<Value> stack_handles(const StackSamples& w = {});
// Every int list over w.elems with length <= w.max_len, empty included.
std::vector<Value> stack_lists(const StackSamples& w = {});

// Identity contracts for the handle-pool stack stage.
SpecTable stack1_specs();

// Contents-tracking stack stage: handle h holds exactly items.
Resource is_stack(const Value& h, const Value& items);
SpecTable stack2a_specs(const StackSamples& w = {});
Resource stack2a_sigma();

// Property-tracking stack stage: handle h holds some bag of values
// satisfying the named property. Agreement entries, freely duplicable,
// so two clients may share one bag.
std::vector<std::string> bag_properties();
bool bag_member(const std::string& prop, const Value& v);
Resource is_bag(const Value& h, const std::string& prop);
SpecTable stack2b_specs(const StackSamples& w = {});
Resource stack2b_sigma();

// Echo's wire protocol: the concrete side passes a stack handle, the
// abstract side the nonzero int list it denotes; the points-to style
// stack fragment crosses the call both ways.
SpecTable echo_specs(const StackSamples& w = {});

// Named integer functions reachable through function pointers in the
// repeat contract. "succ" is the shipped one; "id" exists so the premise
// filter has something to reject.
int64_t sem_apply(const std::string& sem, int64_t m);

Spec succ_spec(const std::vector<int64_t>& ms);
// repeat's contract is parameterized by the table its function-pointer
// argument is drawn from: an instance (f, n, m, sem) enters the carrier
// only if that table provably covers the expected contract of *f at sem.
Spec repeat_entry_spec(const SpecTable& argfns, const RepeatSamples& w = {});
SpecTable repeat_specs(const RepeatSamples& w = {});

Pcm unit_pcm();

}  // namespace abslog
