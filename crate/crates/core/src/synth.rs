//! Deterministic synthetic corpora and networks.
//!
//! Three seeded generators support tests, benchmarks and demos: a uniform
//! random digraph, a preferential-attachment digraph, and a reply process
//! that emits a full synthetic message stream whose reply targets are
//! chosen proportionally to each author's current network degree + 1.
//! Identical parameters and seed always produce identical output.

use crate::graph::{InteractionNetwork, NetworkBuilder};
use crate::ingest::Message;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::{HashMap, VecDeque};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SynthError {
    #[error("probability {name} = {value} must lie in [0, 1]")]
    BadProbability { name: &'static str, value: f64 },
    #[error("generator needs {name} ≥ {min}, got {value}")]
    TooSmall { name: &'static str, min: usize, value: usize },
    #[error("attachment count m = {m} must be positive and below n = {n}")]
    BadAttachment { m: usize, n: usize },
}

fn check_probability(name: &'static str, value: f64) -> Result<(), SynthError> {
    if !(0.0..=1.0).contains(&value) || value.is_nan() {
        return Err(SynthError::BadProbability { name, value });
    }
    Ok(())
}

/// Uniform random digraph: every ordered pair (i, j), i ≠ j, carries a
/// weight-1 edge independently with probability `p`.
pub fn erdos_renyi_network(
    n: usize,
    p: f64,
    seed: u64,
) -> Result<InteractionNetwork, SynthError> {
    check_probability("p", p)?;
    if n < 1 {
        return Err(SynthError::TooSmall { name: "n", min: 1, value: n });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let labels: Vec<String> = (0..n).map(vertex_label).collect();
    let mut builder = NetworkBuilder::new();
    for label in &labels {
        builder.add_vertex(label);
    }
    for i in 0..n {
        for j in 0..n {
            if i != j && rng.random_bool(p) {
                builder.add_interaction(&labels[i], &labels[j], 1);
            }
        }
    }
    Ok(builder.build())
}

/// Preferential-attachment digraph. Growth starts from an (m+1)-clique;
/// each subsequent vertex attaches to `m` distinct existing vertices drawn
/// with probability ∝ (degree + 1)^exponent, adding an edge old → new (the
/// newcomer replies to the established vertex). `exponent` = 0 degenerates
/// to uniform attachment.
pub fn preferential_attachment_network(
    n: usize,
    m: usize,
    exponent: f64,
    seed: u64,
) -> Result<InteractionNetwork, SynthError> {
    if m == 0 || m + 1 > n {
        return Err(SynthError::BadAttachment { m, n });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let labels: Vec<String> = (0..n).map(vertex_label).collect();
    let mut builder = NetworkBuilder::new();
    let m0 = m + 1;
    let mut degree = vec![0usize; n];
    for i in 0..m0 {
        builder.add_vertex(&labels[i]);
        for j in 0..m0 {
            if i < j {
                builder.add_interaction(&labels[i], &labels[j], 1);
                degree[i] += 1;
                degree[j] += 1;
            }
        }
    }
    for v in m0..n {
        let weights: Vec<f64> = degree[..v]
            .iter()
            .map(|&k| ((k + 1) as f64).powf(exponent))
            .collect();
        let mut chosen: Vec<usize> = Vec::with_capacity(m);
        while chosen.len() < m {
            let u = weighted_pick(&mut rng, &weights, |i| !chosen.contains(&i));
            chosen.push(u);
        }
        for &u in &chosen {
            builder.add_interaction(&labels[u], &labels[v], 1);
            degree[u] += 1;
            degree[v] += 1;
        }
    }
    Ok(builder.build())
}

/// Index in `weights` drawn ∝ weight among indices passing `allowed`.
fn weighted_pick<R: Rng>(
    rng: &mut R,
    weights: &[f64],
    allowed: impl Fn(usize) -> bool,
) -> usize {
    let total: f64 = weights
        .iter()
        .enumerate()
        .filter(|&(i, _)| allowed(i))
        .map(|(_, w)| w)
        .sum();
    let mut ticket = rng.random_range(0.0..total);
    let mut last = 0;
    for (i, &w) in weights.iter().enumerate() {
        if !allowed(i) {
            continue;
        }
        last = i;
        if ticket < w {
            return i;
        }
        ticket -= w;
    }
    last
}

fn vertex_label(i: usize) -> String {
    format!("v{i:05}")
}

/// Reply-probability profile of [`reply_process`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReplyProcessParams {
    /// Probability that a message starts a new thread instead of replying.
    pub p_root: f64,
    /// Probability that a message comes from a never-seen author.
    pub p_new: f64,
    /// Reply targets are drawn from the authors of this many most recent
    /// messages (conversations are bursty); 0 means the whole history is
    /// eligible.
    pub recency: usize,
    /// Messages simulated before the emitted stream starts, so the process
    /// is past its cold-start transient. Early emitted replies may
    /// reference burn-in messages, which read as missing antecedents —
    /// just like a truncated real archive.
    pub burn_in: usize,
    /// Probability that a reply stays inside the conversation the author
    /// is already part of (answering a recent message there) instead of
    /// striking up a new exchange. Thread regulars end up pairwise
    /// connected, which is what gives real archives their clustering.
    pub p_focus: f64,
    /// Probability that the author of an answered message writes back.
    /// Write-backs run exchanges in both directions for prominent and
    /// casual participants alike, so flow imbalance stays a property of
    /// the pair rather than of how connected either side is.
    pub p_back: f64,
    /// Base probability that a message draws an answer from one of the
    /// currently active participants (picked with probability ∝ degree
    /// + 1, so habitual answerers snowball into hubs). Follow-up answer
    /// slots fire at a fraction of this rate, giving some messages two
    /// or three independent answerers.
    pub p_answer: f64,
    /// Probability that an existing author is drawn uniformly (a mostly
    /// dormant participant drops back in) instead of in proportion to
    /// messages sent. Keeps every stretch of the stream sprinkled with
    /// one-off posters the way real archives are.
    pub p_return: f64,
}

impl Default for ReplyProcessParams {
    fn default() -> Self {
        ReplyProcessParams {
            p_root: 0.25,
            p_new: 0.05,
            recency: 150,
            burn_in: 4000,
            p_focus: 0.5,
            p_back: 0.4,
            p_answer: 0.35,
            p_return: 0.3,
        }
    }
}

/// Synthetic message stream mimicking mailing-list formation. Authors of
/// new messages follow a rich-get-richer rule (an existing author is picked
/// in proportion to messages already sent), except that a `p_return` slice
/// of messages comes from an author drawn uniformly — mostly quiet people
/// surfacing for a question. A reply either stays in the
/// author's current conversation (probability `p_focus`), answering one of
/// its recent messages from another participant, or strikes up a new
/// exchange: an eligible author — anyone active within the recency
/// horizon, except the sender — is drawn with probability proportional to
/// their current degree + 1 (degree = distinct conversation partners so
/// far) and their most recent message is answered. Timestamps step by a
/// uniform 60–900 s.
pub fn reply_process(
    m_messages: usize,
    params: &ReplyProcessParams,
    seed: u64,
) -> Result<Vec<Message>, SynthError> {
    check_probability("p_root", params.p_root)?;
    check_probability("p_new", params.p_new)?;
    check_probability("p_focus", params.p_focus)?;
    check_probability("p_back", params.p_back)?;
    check_probability("p_answer", params.p_answer)?;
    check_probability("p_return", params.p_return)?;
    if m_messages < 1 {
        return Err(SynthError::TooSmall { name: "M", min: 1, value: m_messages });
    }

    let total = m_messages + params.burn_in;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut messages: Vec<Message> = Vec::with_capacity(total);
    let mut authors: Vec<String> = Vec::new();
    let mut author_of: Vec<u32> = Vec::with_capacity(total);
    let mut last_message_of: Vec<usize> = Vec::new();
    let mut degree: Vec<u64> = Vec::new();
    // Per unordered pair: exchange count and the index of the most recent
    // exchange. Pairs cool down after an exchange and warm up again later,
    // so acquaintances keep re-linking without any pair hoarding weight.
    let mut partners: HashMap<(u32, u32), (u32, usize)> = HashMap::new();
    let refresh_age = if params.recency == 0 { 300 } else { 2 * params.recency };
    let mut scratch: Vec<u32> = Vec::new();
    let mut timestamp: i64 = 1_100_000_000;
    // Conversation bookkeeping: which thread each message belongs to, the
    // most recent messages of each thread, and each author's current
    // thread.
    let mut thread_of: Vec<u32> = Vec::with_capacity(total);
    let mut thread_tail: Vec<Vec<usize>> = Vec::new();
    let mut current_thread: Vec<Option<u32>> = Vec::new();
    // Write-backs waiting to happen: (responder, message to answer).
    let mut pending_back: VecDeque<(u32, usize)> = VecDeque::new();
    // Dormant authors who just resurfaced: (author, return index, follow-up
    // messages left in the visit). A drop-in hangs around for a couple more
    // messages, so it reads as a short visit, not one disconnected post.
    let mut visitors: VecDeque<(u32, usize, u8)> = VecDeque::new();
    const THREAD_TAIL: usize = 10;
    const PROMPT_ANSWER: f64 = 0.9;
    // Second and third answers to the same message fire at a fraction of
    // the base answer rate; most answers come from inside the thread.
    const ANSWER_SLOTS: [f64; 3] = [1.0, 0.5, 0.2];
    const TAIL_ANSWER: f64 = 0.75;
    // Owed replies outstanding at which the promise rate halves.
    const BACKLOG_SCALE: f64 = 40.0;
    // Visit shape: how many follow-up messages a resurfaced author has
    // left, how long a visit can stretch, and how much of the message
    // stream visitors claim while any are around.
    const VISIT_FOLLOW_UPS: u8 = 2;
    const VISIT_SPAN: usize = 500;
    const P_VISIT: f64 = 0.6;
    // Fame compounds only so far: answer picks weight degree + 1 up to a
    // ceiling, past which the senior regulars share the load evenly.
    const ANSWER_SAT: u64 = 500;
    // Distinct partners someone needs before their exchanges echo back and
    // forth on their own; below it, replies they receive come only through
    // the answer machinery.
    const ESTABLISHED_DEGREE: u64 = 6;

    for i in 0..total {
        timestamp += rng.random_range(60..=900);

        while let Some(&(_, since, _)) = visitors.front() {
            if i.saturating_sub(since) > VISIT_SPAN {
                visitors.pop_front();
            } else {
                break;
            }
        }
        // First-time posters arrive at a steady rate, indifferent to how
        // much back-and-forth the regulars owe each other. Among the
        // regulars, a due write-back usually takes the floor; ones that
        // sat past the recency horizon are quietly dropped.
        let mut forced: Option<(u32, usize)> = None;
        let fresh_face = authors.is_empty() || rng.random_bool(params.p_new);
        if !fresh_face {
            while let Some(&(_, j)) = pending_back.front() {
                if j + 2 * params.recency.max(1) < i {
                    pending_back.pop_front();
                    continue;
                }
                if rng.random_bool(PROMPT_ANSWER) {
                    forced = pending_back.pop_front();
                }
                break;
            }
        }
        let author = if fresh_face {
            let idx = authors.len() as u32;
            authors.push(format!("a{idx:04}"));
            last_message_of.push(usize::MAX);
            degree.push(0);
            current_thread.push(None);
            idx
        } else if let Some((a, _)) = forced {
            a
        } else if rng.random_bool(params.p_return) {
            let a = rng.random_range(0..authors.len()) as u32;
            visitors.push_back((a, i, VISIT_FOLLOW_UPS));
            if visitors.len() > 40 {
                visitors.pop_front();
            }
            a
        } else if !visitors.is_empty() && rng.random_bool(P_VISIT) {
            let idx = rng.random_range(0..visitors.len());
            let (a, _, left) = &mut visitors[idx];
            let a = *a;
            *left -= 1;
            if *left == 0 {
                visitors.remove(idx);
            }
            a
        } else {
            author_of[rng.random_range(0..author_of.len())]
        };
        // Long-dormant or barely connected authors read as fresh faces:
        // their messages draw the extra welcome answers scheduled below.
        let returning = match last_message_of[author as usize] {
            usize::MAX => true,
            last => i - last >= refresh_age,
        };

        let antecedent = if let Some((_, j)) = forced {
            Some(j)
        } else if i == 0 || rng.random_bool(params.p_root) {
            None
        } else {
            let focused = rng.random_bool(params.p_focus);
            let in_thread = focused
                .then(|| {
                    focused_antecedent(
                        &mut rng,
                        &current_thread,
                        &thread_tail,
                        &author_of,
                        &partners,
                        author,
                        i.saturating_sub(2 * params.recency.max(1)),
                        i,
                        refresh_age,
                    )
                })
                .flatten();
            in_thread.or_else(|| {
                // A draw that lands on somebody the author is already
                // mid-exchange with gets re-rolled; if everybody drawn is
                // mid-exchange, the author opens a fresh topic instead.
                // Striking up a conversation means reaching for somebody
                // new, not piling onto the same exchange.
                let mut picked = None;
                for _ in 0..5 {
                    let cand = if params.recency == 0 {
                        // Whole history: every known author is eligible.
                        scratch.clear();
                        scratch.extend(0..authors.len() as u32);
                        pick_target(&mut rng, &scratch, &degree, &[author], u64::MAX, false)
                    } else {
                        let start = author_of.len().saturating_sub(params.recency);
                        pick_target(
                            &mut rng,
                            &author_of[start..],
                            &degree,
                            &[author],
                            u64::MAX,
                            false,
                        )
                    };
                    let Some(t) = cand else { break };
                    let pair = (author.min(t), author.max(t));
                    let busy =
                        matches!(partners.get(&pair), Some(&(_, last)) if i - last < refresh_age);
                    if !busy {
                        picked = Some(t);
                        break;
                    }
                }
                picked.map(|t| last_message_of[t as usize])
            })
        };

        let reply_to = antecedent.map(|m| {
            let target = author_of[m];
            let pair = (author.min(target), author.max(target));
            let entry = partners.entry(pair).or_insert((0, i));
            let (count_before, last_before) = *entry;
            if count_before == 0 {
                degree[author as usize] += 1;
                degree[target as usize] += 1;
            }
            *entry = (count_before + 1, i);
            // Established members reliably write back to a fresh or
            // re-warmed exchange; an exchange already in full swing winds
            // down instead of echoing forever, and people still finding
            // their feet don't write back at all — their messages are
            // received by the answer machinery below. Making the habit a
            // matter of standing rather than a coin toss keeps each
            // cohort's footprint uniform.
            let responds = degree[target as usize] > ESTABLISHED_DEGREE;
            let warm = count_before == 0 || i - last_before >= refresh_age;
            if responds && warm && rng.random_bool(params.p_back) {
                pending_back.push_back((target, i));
            }
            messages[m].id.clone()
        });

        // Join the antecedent's thread, or open a new one.
        let thread = match antecedent {
            Some(m) => thread_of[m],
            None => {
                thread_tail.push(Vec::new());
                (thread_tail.len() - 1) as u32
            }
        };
        thread_of.push(thread);
        let tail = &mut thread_tail[thread as usize];
        tail.push(i);
        if tail.len() > THREAD_TAIL {
            tail.remove(0);
        }
        current_thread[author as usize] = Some(thread);

        let id = format!("m{i:05}");
        last_message_of[author as usize] = i;
        author_of.push(author);
        messages.push(Message {
            id,
            author: authors[author as usize].clone(),
            timestamp,
            reply_to,
            ordinal: i,
        });

        // Queue answers to this message. Newcomers' questions rarely go
        // unanswered (two people often pile on), a dropping-in regular
        // reliably draws one reply, and exchanges that already ran their
        // course draw no further answers. Answer messages themselves
        // invite fewer follow-ups, and a deep backlog of owed replies
        // throttles new promises. Answerers are mostly people already
        // following the conversation, with the wider active crowd stepping
        // in otherwise — always weighted by degree + 1, so habitual
        // answerers snowball.
        let newcomer = degree[author as usize] <= 2;
        let casual = returning && !newcomer;
        let follow_up = if forced.is_some() { 0.5 } else { 1.0 };
        let freshness_floor = i.saturating_sub(2 * params.recency.max(1));
        // The person already holding the exchange doesn't count as a fresh
        // answer; answers come from someone else in the room.
        let mut answerers: Vec<u32> = vec![author];
        if let Some(m) = antecedent {
            answerers.push(author_of[m]);
        }
        for (slot, &share) in ANSWER_SLOTS.iter().enumerate() {
            // The welcome answer owed to a fresh face skips the backlog
            // throttle: those replies carry the structure, the follow-up
            // echoes are what a busy list lets slide.
            let (p, throttled) = if slot == 0 && (newcomer || casual) {
                ((2.2 * params.p_answer).min(0.92), false)
            } else if slot == 1 && newcomer {
                ((2.2 * params.p_answer * 0.85).min(0.92), true)
            } else if casual {
                (0.0, true)
            } else {
                (params.p_answer * share * follow_up, true)
            };
            let throttle = if throttled {
                BACKLOG_SCALE / (BACKLOG_SCALE + pending_back.len() as f64)
            } else {
                1.0
            };
            if p <= 0.0 || !rng.random_bool(p * throttle) {
                continue;
            }
            // Whoever answers is somebody not already in a live exchange
            // with the asker, so each answer opens one fresh channel.
            let free = |a: u32, partners: &HashMap<(u32, u32), (u32, usize)>| {
                let pair = (a.min(author), a.max(author));
                !matches!(partners.get(&pair), Some(&(_, last)) if i - last < refresh_age)
            };
            let mut picked = None;
            if rng.random_bool(TAIL_ANSWER) {
                scratch.clear();
                scratch.extend(
                    thread_tail[thread as usize]
                        .iter()
                        .filter(|&&m| m >= freshness_floor)
                        .map(|&m| author_of[m]),
                );
                scratch.retain(|&a| free(a, &partners));
                picked = pick_target(&mut rng, &scratch, &degree, &answerers, ANSWER_SAT, true);
            }
            if picked.is_none() {
                scratch.clear();
                if params.recency == 0 {
                    scratch.extend(0..authors.len() as u32);
                } else {
                    let start = author_of.len().saturating_sub(params.recency);
                    scratch.extend_from_slice(&author_of[start..]);
                }
                scratch.retain(|&a| free(a, &partners));
                picked = pick_target(&mut rng, &scratch, &degree, &answerers, ANSWER_SAT, true);
            }
            if let Some(a) = picked {
                let pair = (a.min(author), a.max(author));
                let warm = match partners.get(&pair) {
                    None => true,
                    Some(&(_, last)) => i - last >= refresh_age,
                };
                if warm {
                    pending_back.push_back((a, i));
                }
                answerers.push(a);
            }
        }
    }
    Ok(messages.split_off(params.burn_in))
}

/// A recent message from the author's current conversation written by a
/// participant the author is not in an ongoing exchange with; None when
/// the conversation offers nobody new (the author then strikes up a new
/// exchange instead). Favouring unmet or long-quiet participants is what
/// knits the regulars of a conversation into a clique rather than a
/// ping-pong pair.
#[allow(clippy::too_many_arguments)]
fn focused_antecedent<R: Rng>(
    rng: &mut R,
    current_thread: &[Option<u32>],
    thread_tail: &[Vec<usize>],
    author_of: &[u32],
    partners: &HashMap<(u32, u32), (u32, usize)>,
    author: u32,
    freshness_floor: usize,
    now: usize,
    refresh_age: usize,
) -> Option<usize> {
    let thread = current_thread[author as usize]?;
    let candidates: Vec<usize> = thread_tail[thread as usize]
        .iter()
        .copied()
        .filter(|&m| {
            if m < freshness_floor {
                return false;
            }
            let other = author_of[m];
            if other == author {
                return false;
            }
            match partners.get(&(author.min(other), author.max(other))) {
                None => true,
                Some(&(_, last)) => now - last >= refresh_age,
            }
        })
        .collect();
    if candidates.is_empty() {
        None
    } else {
        Some(candidates[rng.random_range(0..candidates.len())])
    }
}

/// Draws one author from those appearing in `eligible`, skipping the
/// excluded ones, with probability proportional to degree + 1 (squared
/// when `sharp`, which hands most of the answering work to the handful of
/// regulars who do it habitually). None when nobody is eligible.
fn pick_target<R: Rng>(
    rng: &mut R,
    eligible: &[u32],
    degree: &[u64],
    exclude: &[u32],
    cap: u64,
    sharp: bool,
) -> Option<u32> {
    let mut candidates: Vec<u32> = eligible.to_vec();
    candidates.sort_unstable();
    candidates.dedup();
    candidates.retain(|&a| !exclude.contains(&a));
    if candidates.is_empty() {
        return None;
    }
    let weight = |a: u32| {
        let w = degree[a as usize].min(cap) + 1;
        if sharp {
            w * w * w
        } else {
            w
        }
    };
    let total: u64 = candidates.iter().map(|&a| weight(a)).sum();
    let mut ticket = rng.random_range(0..total);
    for &a in &candidates {
        let w = weight(a);
        if ticket < w {
            return Some(a);
        }
        ticket -= w;
    }
    unreachable!("ticket always lands within the summed weights");
}

/// Rewrites a network as a message stream that rebuilds it exactly: one
/// root message per vertex (in label order), then one reply per unit of
/// edge weight, each attached to the source vertex's root. Useful for
/// feeding synthetic graphs through the corpus pipeline.
pub fn messages_from_network(network: &InteractionNetwork) -> Vec<Message> {
    let n = network.n_vertices();
    let mut messages = Vec::with_capacity(n + network.total_weight() as usize);
    let mut timestamp: i64 = 1_100_000_000;
    let mut counter = 0usize;
    let mut root_of = Vec::with_capacity(n);
    let push = |author: &str, reply_to: Option<String>, ts: &mut i64, c: &mut usize| {
        let id = format!("m{:06}", *c);
        *c += 1;
        *ts += 300;
        Message {
            id,
            author: author.to_string(),
            timestamp: *ts,
            reply_to,
            ordinal: 0,
        }
    };
    for v in 0..n {
        let msg = push(network.label(v), None, &mut timestamp, &mut counter);
        root_of.push(msg.id.clone());
        messages.push(msg);
    }
    for (from, to, weight) in network.edges() {
        for _ in 0..weight {
            let msg = push(
                network.label(to),
                Some(root_of[from].clone()),
                &mut timestamp,
                &mut counter,
            );
            messages.push(msg);
        }
    }
    messages
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_network;

    #[test]
    fn erdos_renyi_is_deterministic_and_calibrated() {
        let a = erdos_renyi_network(200, 0.05, 7).unwrap();
        let b = erdos_renyi_network(200, 0.05, 7).unwrap();
        assert_eq!(a.edge_list_csv(), b.edge_list_csv());
        let c = erdos_renyi_network(200, 0.05, 8).unwrap();
        assert_ne!(a.edge_list_csv(), c.edge_list_csv());

        assert_eq!(a.n_vertices(), 200);
        // Edge count within 4σ of its binomial expectation.
        let trials: f64 = 200.0 * 199.0;
        let mean = trials * 0.05;
        let sd = (trials * 0.05 * 0.95).sqrt();
        let z = a.n_edges() as f64;
        assert!((z - mean).abs() < 4.0 * sd, "edge count {z} far from {mean}");
        for (from, to, w) in a.edges() {
            assert_ne!(from, to);
            assert_eq!(w, 1);
        }
    }

    #[test]
    fn erdos_renyi_rejects_bad_parameters() {
        assert!(matches!(
            erdos_renyi_network(10, 1.5, 0),
            Err(SynthError::BadProbability { name: "p", .. })
        ));
        assert!(erdos_renyi_network(0, 0.5, 0).is_err());
    }

    #[test]
    fn preferential_attachment_shape() {
        let n = 300;
        let m = 5;
        let net = preferential_attachment_network(n, m, 1.0, 11).unwrap();
        assert_eq!(net.n_vertices(), n);
        // Clique edges plus m distinct edges per later vertex.
        let m0 = m + 1;
        assert_eq!(net.n_edges(), m0 * (m0 - 1) / 2 + (n - m0) * m);
        // Every post-clique vertex has at least m partners.
        for v in 0..n {
            assert!(net.neighbors(v).len() >= m.min(m0 - 1));
        }
    }

    #[test]
    fn attachment_exponent_widens_the_tail() {
        let max_degree = |exponent: f64| {
            let net = preferential_attachment_network(400, 3, exponent, 5).unwrap();
            (0..net.n_vertices())
                .map(|v| net.neighbors(v).len())
                .max()
                .unwrap()
        };
        // Rich-get-richer concentrates partners far beyond uniform
        // attachment on the same seed.
        assert!(max_degree(1.0) > max_degree(0.0) + 10);
    }

    #[test]
    fn reply_process_is_deterministic() {
        let p = ReplyProcessParams::default();
        let a = reply_process(500, &p, 42).unwrap();
        let b = reply_process(500, &p, 42).unwrap();
        assert_eq!(a, b);
        let c = reply_process(500, &p, 43).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn reply_process_stream_is_well_formed() {
        let msgs = reply_process(2000, &ReplyProcessParams::default(), 9).unwrap();
        assert_eq!(msgs.len(), 2000);
        let mut seen = std::collections::HashMap::new();
        for (i, m) in msgs.iter().enumerate() {
            assert!(seen.insert(m.id.clone(), i).is_none(), "duplicate id");
            if i > 0 {
                assert!(m.timestamp > msgs[i - 1].timestamp);
            }
        }
        let mut resolved = 0;
        for m in &msgs {
            if let Some(target) = &m.reply_to {
                // Early replies may point into the burn-in prefix; the rest
                // must point backwards and never at the author themselves.
                if let Some(&j) = seen.get(target) {
                    resolved += 1;
                    assert!(seen[&m.id] > j, "reply precedes its antecedent");
                    assert_ne!(msgs[j].author, m.author, "self-reply emitted");
                }
            }
        }
        assert!(resolved > 1000, "most replies resolve in-stream, got {resolved}");
    }

    #[test]
    fn burn_in_is_not_emitted() {
        let with_burn = ReplyProcessParams { burn_in: 500, ..Default::default() };
        let msgs = reply_process(100, &with_burn, 3).unwrap();
        assert_eq!(msgs.len(), 100);
        // Ids continue the internal counter past the burn-in prefix.
        assert_eq!(msgs[0].id, "m00500");
        let without = ReplyProcessParams { burn_in: 0, ..Default::default() };
        let cold = reply_process(100, &without, 3).unwrap();
        assert_eq!(cold.len(), 100);
        assert_eq!(cold[0].id, "m00000");
        assert!(cold[0].reply_to.is_none(), "cold start opens with a root");
    }

    #[test]
    fn reply_process_network_is_heavy_tailed() {
        let msgs = reply_process(20000, &ReplyProcessParams::default(), 1).unwrap();
        let net = build_network(&msgs);
        let mut degrees: Vec<usize> =
            (0..net.n_vertices()).map(|v| net.neighbors(v).len()).collect();
        degrees.sort_unstable();
        let median = degrees[degrees.len() / 2];
        let max = *degrees.last().unwrap();
        assert!(
            max >= 10 * median.max(1),
            "max degree {max} not ≥ 10× median {median}"
        );
    }

    #[test]
    fn reply_process_rejects_bad_parameters() {
        let bad = ReplyProcessParams { p_root: -0.1, ..Default::default() };
        assert!(reply_process(10, &bad, 0).is_err());
        assert!(reply_process(0, &ReplyProcessParams::default(), 0).is_err());
    }

    #[test]
    fn network_round_trips_through_messages() {
        let net = erdos_renyi_network(60, 0.08, 3).unwrap();
        let msgs = messages_from_network(&net);
        let rebuilt = build_network(&msgs);
        assert_eq!(rebuilt.n_vertices(), net.n_vertices());
        assert_eq!(rebuilt.edge_list_csv(), net.edge_list_csv());
        assert_eq!(rebuilt.vertex_list_csv(), net.vertex_list_csv());
    }
}
