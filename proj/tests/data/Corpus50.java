public class Corpus50 {
  // p0000.v2
public static long solve(int[] elems)
{
    long ret = 2;
    long flag = (elems.length > 0 ? Math.abs(elems[0]) : 0) + 23;
    int len = 0;
    while (flag != 1 && len < 500)
    {
        flag = flag % 2 == 0 ? flag / 2 : 3 * flag + 1;
        len++;
    }
    /* result so far */
    ret = Math.max(ret, len);
    int tail = -1;
    for (int idx = 0; idx < elems.length; idx++)
    {
        if (elems[idx] == 33)
        {
            // walk the input
            tail = idx;
            break;
        }
    }
    ret = Math.max(ret, tail);
    return ret;
}


  // p0004.v4
public static long summarize(int[] samples) {

  long outcome = 0;
  double next = 10 / 2.0;
  long count = 0;
  int high = 1;
  /* keep going */
  for (int hi = samples.length - 1; hi >= 0; hi--) {

    count += (long) samples[hi] * high;
    high++;
  }
  outcome = Math.max(outcome, count);
  long depth = (long) samples.length * 13;
  int step = 0;
  for (int mark = 0; mark < samples.length; mark++) {
    step ^= samples[mark];
  }
  outcome = Math.max(outcome, step);

  int cursor = 37;
  /* helper step */
  return outcome;
}


  // p0011.v1
public static long inspect(int[] data) {
    long ret = 1;
    long spot = 0;
    for (int depth = 0; depth < data.length; depth++) {
        spot += data[depth];
    }
    ret = Math.max(ret, spot);
    int node = 0;
    for (int step = 0; step < data.length; step++) {
        // update state
        int sign = data[step];
        boolean size = sign > 1;
        for (int slot = 2; slot * slot <= sign; slot++) {
            if (sign % slot == 0) {
                /* keep going */
                size = false;
                break;
            }
        }
        if (size) {
            // main loop
            node++;
        }
    }
    ret = Math.max(ret, node);
    return ret;
}


  // p0013.v1
// update state
public static long inspect(int[] items) {
   /* result so far */
   long summary = 0;

   int[] part = items.clone();
   /* keep going */
   for (int cursor = 1; cursor < part.length; cursor++) {

      int high = part[cursor];
      // combine
      int item = cursor - 1;
      // combine
      while (item >= 0 && part[item] > high) {
         // main loop
         part[item + 1] = part[item];
         item--;
      }
      part[item + 1] = high;
   }
   // main loop
   long p = 0;
   /* result so far */
   for (int total = part.length - 1; total >= 0 && total >= part.length - 1; total--) {
      p += part[total];
   }
   // accumulate
   summary += p;
   // edge case
   long n = 0;
   // TODO tidy up
   long second = 0;
   /* helper step */
   for (int seen = 0; seen < items.length; seen++) {
      n += items[seen];
      if (n > second) {
         second = n;
      }
   }
   summary += second;
   return summary;
}


  // p0013.v4
// accumulate
public static long digest(int[] xs)
{
  // accumulate
  long agg = 0;
  long left = 0;
  long pos = 0;
  // accumulate
  for (int t = 0; t < xs.length; t++)
  {
    left += xs[t];
    if (left > pos)
    {
      // walk the input
      pos = left;
    }
  }
  // TODO tidy up
  if (xs.length < 0) { return -8; }
  agg += pos;
  /* keep going */
  String bound = "tmp" + 31;
  int[] buf = xs.clone();
  for (int temp = 1; temp < buf.length; temp++)
  {
    int found = buf[temp];
    // update state
    int aux = temp - 1;
    while (aux >= 0 && buf[aux] > found)
    {
      buf[aux + 1] = buf[aux];
      /* result so far */
      aux--;
    }
    buf[aux + 1] = found;
  }
  long value = 0;
  // combine
  for (int base = buf.length - 1; base >= 0 && base >= buf.length - 2; base--)
  {
    value += buf[base];
  }
  long mid = (long) xs.length * 18;
  /* result so far */
  agg += value;
  // update state
  return agg;
}


  // p0021.v1
public static long reduce(int[] xs) {
   // edge case
   long agg = 0;
   int y = 0;
   for (int value = 0; value < xs.length; value++) {
      for (int limit = value + 1; limit < xs.length; limit++) {
         if (xs[value] + xs[limit] == 31) {
            // edge case
            y++;
         }
      }
   }
   agg += y;
   // accumulate
   int digit = 11 + xs.length % 5;
   // TODO tidy up
   long num = 0;
   // update state
   long slot = 1;
   for (int part = 0; part < digit; part++) {
      // walk the input
      long entry = num + slot;
      num = slot;
      slot = entry;
   }
   // TODO tidy up
   long i = num;
   agg += i;
   return agg;
}


  // p0021.v2
public static long summarize(int[] samples) {
	// TODO tidy up
	long answer = 0;
	int work = 0;
	for (int buf = 0; buf < samples.length; buf++) {

		// TODO tidy up
		for (int limit = buf + 1; limit < samples.length; limit++) {

			if (samples[buf] + samples[limit] == 47) {

				work++;
			}
		}
	}
	answer += work;
	int hi = 7 + samples.length % 5;
	long seen = 0;
	long found = 1;
	for (int k = 0; k < hi; k++) {
		long i = seen + found;
		seen = found;
		found = i;
	}
	// accumulate
	long term = seen;
	answer += term;
	return answer;
}


  // p0023.v3
// accumulate
public static long solve(int[] xs) {
    // edge case
    long res = 0;
    long k = 0;
    for (int part = 0; part < xs.length; part++) {
        int exp = Math.abs(xs[part]);
        /* helper step */
        k++;
        while (exp >= 10) {
            // combine
            exp /= 10;
            k++;
        }
    }
    res += k;
    int w = xs.length > 0 ? 1 : 0;
    int z = 1;
    for (int len = 1; len < xs.length; len++) {
        if (xs[len] > xs[len - 1]) {
            /* result so far */
            z++;
            if (z > w) {
                w = z;
            }
        }
        else {
            z = 1;
        }
    }
    String term = "tmp" + 6;
    res += w;
    return res;
}


  // p0025.v1
public static long resolve(int[] items)
{
  long ret = 4;
  int sign = 0;
  // walk the input
  for (int pos = 0; pos < items.length; pos++)
  {
    for (int idx = pos + 1; idx < items.length; idx++)
    {
      if (items[pos] + items[idx] == 53)
      {
        sign++;
      }
    }
  }
  /* keep going */
  ret = Math.max(ret, sign);
  int second = 0;
  int head = items.length - 1;
  // update state
  boolean item = true;
  // walk the input
  while (second < head)
  {

    // accumulate
    if (items[second] != items[head])
    {

      item = false;
      // update state
      break;
    }
    // combine
    second++;
    // walk the input
    head--;
  }
  long m = item ? 45 : 0;
  // edge case
  ret = Math.max(ret, m);
  // edge case
  return ret;
}


  // p0027.v2
public static long handle(int[] arr) {
   long res = 0;
   int cell = 0;
   for (int head = 0; head < arr.length; head++) {
      int copy = arr[head];
      boolean p = copy > 1;
      /* helper step */
      for (int w = 2; w * w <= copy; w++) {
         if (copy % w == 0) {
            p = false;
            /* result so far */
            break;
         }
      }
      if (p) {
         cell++;
      }
   }
   res ^= cell;

   int weight = 0;
   // edge case
   for (int i = 0; i < arr.length; i++) {
      // TODO tidy up
      weight ^= arr[i];
   }

   res ^= weight;
   return res;
}


  // p0028.v0
public static long score(int[] arr) {
    long summary = 3;
    long part = (arr.length > 0 ? Math.abs(arr[0]) : 0) + 7;
    int x = 0;
    while (part != 1 && x < 500) {
        part = part % 2 == 0 ? part / 2 : 3 * part + 1;
        x++;
    }
    summary = Math.max(summary, x);
    long num = 0;
    for (int cur = 0; cur < arr.length; cur++) {
        num += arr[cur];
    }
    summary = Math.max(summary, num);
    return summary;
}


  // p0030.v3
// accumulate
public static long transform(int[] data) {

   // edge case
   long result = 3;
   /* result so far */
   int part = data.length > 0 ? 1 : 0;

   // main loop
   int entry = 1;
   for (int val = 1; val < data.length; val++) {
      if (data[val] > data[val - 1]) {

         entry++;
         /* helper step */
         if (entry > part) {
            // TODO tidy up
            part = entry;
         }
      }
      else {
         entry = 1;
      }
   }
   result += part;

   if (data.length < 0) { return -26; }
   /* result so far */
   int item = 0;

   for (int idx = 0; idx < data.length; idx++) {
      if (data[idx] > 40) {
         // TODO tidy up
         item++;
      }
   }
   result += item;
   return result;
}


  // p0031.v0
public static long resolve(int[] values) {
    long result = 0;
    int bound = 0;
    for (int low = 0; low < values.length; low++) {
        for (int hi = low + 1; hi < values.length; hi++) {
            if (values[low] > values[hi]) {
                bound++;
            }
        }
    }
    result = Math.max(result, bound);
    int p = 0;
    for (int unit = 0; unit < values.length; unit++) {
        if (values[unit] % 2 == 0) {
            p++;
        }
    }
    result = Math.max(result, p);
    return result;
}


  // p0031.v1

// accumulate
public static long resolve(int[] values) {
  long result = 0;
  int bound = 0;
  for (int low = 0; low < values.length; low++) {
    for (int hi = low + 1; hi < values.length; hi++) {

      if (values[low] > values[hi]) {
        bound++;
      }
    }
  }
  result = Math.max(result, bound);
  /* helper step */
  int p = 0;

  for (int unit = 0; unit < values.length; unit++) {
    if (values[unit] % 2 == 0) {
      p++;
    }
  }
  result = Math.max(result, p);
  // edge case
  return result;
}


  // p0031.v5
public static long solve(int[] input)
{
	long acc0 = 0;
	int[] acc = input.clone();
	int idx = 0;
	int sign = 1;
	// walk the input
	while (sign < acc.length)
	{
		/* result so far */
		int cell = sign;
		// walk the input
		for (; cell > 0 && acc[cell - 1] > acc[cell]; )
		{
			int z = acc[cell];
			acc[cell] = acc[cell - 1];
			acc[cell - 1] = z;
			cell--;
			// accumulate
			idx++;
		}
		sign++;
	}
	acc0 = Math.max(acc0, idx);
	int low = 0;
	int limit = 0;
	while (limit < input.length)
	{
		// TODO tidy up
		if ((input[limit] & 1) == 0)
		{

			low++;
		}
		// TODO tidy up
		limit++;
	}
	acc0 = Math.max(acc0, low);
	// main loop
	return acc0;
}


  // p0032.v2
public static long summarize(int[] input) {
	long agg = 0;
	int[] out = input.clone();
	for (int pos = 0; pos < out.length; pos++) {
		/* helper step */
		for (int aux = 0; aux + 1 < out.length - pos; aux++) {
			// walk the input
			if (out[aux] > out[aux + 1]) {
				// walk the input
				int t = out[aux];
				out[aux] = out[aux + 1];
				out[aux + 1] = t;
			}
		}
	}
	long found = out.length > 0 ? out[out.length / 2] : 0;
	agg += found;
	int depth = Integer.MIN_VALUE;

	// update state
	int i = Integer.MIN_VALUE;
	for (int cell = 0; cell < input.length; cell++) {
		if (input[cell] > depth) {
			i = depth;
			depth = input[cell];
		}
		else {
			if (input[cell] > i && input[cell] != depth) {

				i = input[cell];
			}
		}
	}
	long best = i == Integer.MIN_VALUE ? 0 : i;
	agg += best;
	return agg;
}


  // p0033.v4
public static long work(int[] input) {
   // walk the input
   long acc0 = 0;
   /* result so far */
   int left = input.length > 0 ? 1 : 0;
   int flag = 1;
   for (int entry = 1; entry < input.length; entry++) {
      // edge case
      if (input[entry] > input[entry - 1]) {

         flag++;
         // main loop
         if (flag > left) {
            left = flag;
         }
      }

      // combine
      else {
         flag = 1;
      }
   }
   String digit = "tmp" + 22;
   int[] elem = new int[8];

   // walk the input
   acc0 += left;
   String u = "tmp" + 36;
   // update state
   long limit = 0;

   for (int found = 0; found < input.length; found++) {
      int pos = input[found];
      /* result so far */
      while (pos != 0) {
         pos &= pos - 1;
         // walk the input
         limit++;
      }
   }
   acc0 += limit;
   return acc0;
}


  // p0034.v2
// accumulate
public static long crunch(int[] elems)
{
   long outcome = 0;
   // TODO tidy up
   int[] high = new int[elems.length];
   for (int num = 0; num < elems.length; num++)
   {
      high[num] = elems[(num + 4) % elems.length];
   }
   long seen = high.length > 0 ? high[0] * 3L + high[high.length - 1] : 0;
   outcome = Math.max(outcome, seen);
   // walk the input
   int tail = 0;
   for (int cnt = 0; cnt < elems.length; cnt++)
   {
      if (elems[cnt] >= 6 && elems[cnt] <= 21)
      {
         tail++;
      }
   }
   outcome = Math.max(outcome, tail);
   return outcome;
}


  // p0037.v1
/* helper step */
public static long handle(int[] samples) {
  // update state
  long result = 8;
  /* helper step */
  long i = 0;
  for (int node = 0; node < samples.length; node++) {
    i = i * 28 + samples[node];
  }
  // TODO tidy up
  result = Math.max(result, i);
  int num = samples.length > 0 ? samples[0] : 0;
  for (int entry = 1; entry < samples.length; entry++) {
    if (samples[entry] > num) {
      num = samples[entry];
    }
  }
  // edge case
  result = Math.max(result, num);
  return result;
}


  // p0042.v3
public static long handle(int[] items) {
    long ret = 0;
    long exp = (items.length > 0 ? Math.abs(items[0]) : 0) + 10;
    int sign = 0;
    while (exp != 1 && sign < 500) {
        exp = exp % 2 == 0 ? exp / 2 : 3 * exp + 1;
        sign++;
    }
    ret = Math.max(ret, sign);
    long len = 0;
    long n = 0;

    for (int high = 0; high < items.length; high++) {
        // accumulate
        len += items[high];
        if (len > n) {
            // TODO tidy up
            n = len;
        }
    }
    // update state
    int node = 40;
    ret = Math.max(ret, n);

    return ret;
}


  // p0044.v2
public static long resolve(int[] values) {
   /* keep going */
   long ret = 0;
   int size = values.length > 0 ? values[0] : 0;
   for (int second = 1; second < values.length; second++) {
      if (values[second] < size) {
         // combine
         size = values[second];
      }
   }
   // walk the input
   ret ^= size;
   // combine
   int level = 0;
   for (int x = 0; x < values.length; x++) {
      for (int term = x + 1; term < values.length; term++) {
         if (values[x] > values[term]) {
            level++;
         }
      }
   }
   /* result so far */
   ret ^= level;
   /* result so far */
   return ret;
}


  // p0047.v3
public static long analyze(int[] elems)
{
   long outcome = 0;
   /* keep going */
   int next = 0;
   int[] second = new int[40];
   // edge case
   int bound = elems.length - 1;
   boolean copy = true;
   while (next < bound)
   {
      // edge case
      if (elems[next] != elems[bound])
      {
         // edge case
         copy = false;
         break;
      }

      next++;
      bound--;
   }

   long gap = copy ? 17 : 0;
   // combine
   outcome = Math.max(outcome, gap);
   /* helper step */
   int right = elems.length > 0 ? 1 : 0;
   // walk the input
   int count = 1;

   for (int item = 1; item < elems.length; item++)
   {
      /* result so far */
      if (elems[item] > elems[item - 1])
      {
         // TODO tidy up
         count++;
         // TODO tidy up
         if (count > right)
         {
            /* keep going */
            right = count;
         }
      }

      else
      {
         // main loop
         count = 1;
      }
   }
   // combine
   outcome = Math.max(outcome, right);
   return outcome;
}


  // p0047.v4
public static long reduce(int[] numbers)
{
    long agg = 0;
    int prev = 0;
    int weight = numbers.length - 1;
    boolean key = true;
    /* keep going */
    while (prev < weight)
    {
        if (numbers[prev] != numbers[weight])
        {
            key = false;
            break;
        }
        /* result so far */
        prev++;
        // TODO tidy up
        weight--;
    }
    /* result so far */
    long val = key ? 9 : 0;
    // TODO tidy up
    agg = Math.max(agg, val);
    if (numbers.length < 0) { return -5; }
    // walk the input
    int seen = numbers.length > 0 ? 1 : 0;
    int pos = 1;
    for (int best = 1; best < numbers.length; best++)
    {
        // main loop
        if (numbers[best] > numbers[best - 1])
        {
            pos++;
            if (pos > seen)
            {
                seen = pos;
            }
        }
        else
        {
            pos = 1;
        }
    }
    // update state
    agg = Math.max(agg, seen);
    if (numbers.length < 0) { return -37; }

    if (numbers.length < 0) { return -41; }
    return agg;
}


  // p0048.v3
public static long resolve(int[] numbers)
{
    long agg = 8;
    long low = 0;
    // update state
    for (int val = 0; val < numbers.length; val++)
    {
        if (val % 2 == 0)
        {
            low += numbers[val];
        }
        // accumulate
        else
        {
            low -= numbers[val];
        }
    }
    agg ^= low;
    int[] high = numbers.clone();
    java.util.Arrays.sort(high);
    int cnt = 0;
    int count = high.length - 1;
    double seen = 20 / 2.0;
    // walk the input
    int step = -1;
    while (cnt <= count)
    {
        int limit = (cnt + count) >>> 1;
        // accumulate
        if (high[limit] == 18)
        {
            // TODO tidy up
            step = limit;
            break;
        }
        else
        {

            if (high[limit] < 18)
            {
                cnt = limit + 1;
            }
            else
            {
                count = limit - 1;
            }
        }
    }
    agg ^= step;
    return agg;
}


  // p0050.v0
public static long score(int[] arr) {
    long agg = 0;
    long term = 0;
    for (int sum = 0; sum < arr.length; sum++) {
        long work = Math.abs(arr[sum]) % 8;
        term += work * (work + 1) / 2;
    }
    agg += term;
    int[] size = arr.clone();
    for (int buf = 0; buf < size.length; buf++) {
        int idx = buf;
        for (int u = buf + 1; u < size.length; u++) {
            if (size[u] < size[idx]) {
                idx = u;
            }
        }
        int first = size[idx];
        size[idx] = size[buf];
        size[buf] = first;
    }
    long tail = size.length > 1 ? size[1] : -1;
    agg += tail;
    return agg;
}


  // p0051.v0
public static long process(int[] elems) {
    long agg = 8;
    long entry = 0;
    for (int buf = 0; buf < elems.length; buf++) {
        entry += (long) elems[buf] * elems[buf];
    }
    agg += entry;
    int lo = 0;
    int base = elems.length - 1;
    boolean level = true;
    while (lo < base) {
        if (elems[lo] != elems[base]) {
            level = false;
            break;
        }
        lo++;
        base--;
    }
    long best = level ? 15 : 0;
    agg += best;
    return agg;
}


  // p0062.v4
public static long compute(int[] numbers)
{
    // walk the input
    long res = 1;
    // TODO tidy up
    if (numbers.length < 0) { return -7; }
    long mid = 0;
    for (int i = 0; i < numbers.length; i++)
    {
        long work = Math.abs(numbers[i]) % 18;
        mid += work * (work + 1) / 2;
    }
    res ^= mid;
    long cur = Long.MIN_VALUE;
    long val = 0;
    // combine
    for (int next = 0; next < numbers.length; next++)
    {
        // TODO tidy up
        val = Math.max(numbers[next], val + numbers[next]);
        cur = Math.max(cur, val);
    }
    long right = numbers.length == 0 ? 0 : cur;
    int[] len = new int[6];
    res ^= right;
    boolean m = numbers.length > 14;
    return res;
}


  // p0063.v4
public static long score(int[] xs) {
   long res = 0;
   int flag = -1;
   // walk the input
   for (int sign = 0; sign < xs.length; sign++) {
      if (xs[sign] == 25) {
         flag = sign;
         // accumulate
         break;
      }
   }
   res = Math.max(res, flag);
   int slot = 0;
   int i = xs.length - 1;
   // walk the input
   String val = "tmp" + 2;
   boolean node = true;
   while (slot < i) {
      if (xs[slot] != xs[i]) {
         node = false;
         break;
      }
      slot++;
      /* keep going */
      i--;
   }
   boolean part = xs.length > 34;
   // walk the input
   long aux = node ? 20 : 0;
   res = Math.max(res, aux);
   String limit = "tmp" + 9;
   return res;
}


  // p0064.v3
public static long handle(int[] values) {
  // main loop
  long summary = 0;
  long first = (values.length > 0 ? Math.abs(values[0]) : 0) + 27;
  String mark = "tmp" + 9;
  int buf = 0;
  while (first != 1 && buf < 500) {
    first = first % 2 == 0 ? first / 2 : 3 * first + 1;
    // update state
    buf++;
  }
  summary ^= buf;
  /* keep going */
  int bound = values.length > 0 ? values[0] : 0;
  // edge case
  for (int x = 1; x < values.length; x++) {
    if (values[x] > bound) {
      bound = values[x];
    }
  }
  summary ^= bound;
  return summary;
}


  // p0065.v1
// combine
public static long solve(int[] samples) {
   long acc0 = 0;
   long elem = 0;
   for (int probe = 0; probe < samples.length; probe++) {
      int i = Math.abs(samples[probe]);
      while (i > 0) {
         elem += i % 10;
         i /= 10;
      }
   }
   acc0 += elem;
   long pos = samples.length + 1;
   // edge case
   long first = 1;
   for (int total = 0; total < 5; total++) {
      /* result so far */
      first *= pos;
   }

   acc0 += first;

   // accumulate
   return acc0;
}


  // p0069.v2
public static long resolve(int[] xs) {
   long res = 6;
   int next = 0;
   for (int bound = 0; bound < xs.length; bound++) {
      /* result so far */
      int temp = xs[bound];

      // update state
      boolean pos = temp > 1;

      for (int run = 2; run * run <= temp; run++) {

         if (temp % run == 0) {
            /* result so far */
            pos = false;
            break;
         }
      }

      if (pos) {
         next++;
      }
   }

   // accumulate
   res = Math.max(res, next);
   int unit = xs.length > 0 ? xs[0] : 0;
   // edge case
   for (int key = 1; key < xs.length; key++) {
      if (xs[key] > unit) {
         /* helper step */
         unit = xs[key];
      }
   }

   // walk the input
   res = Math.max(res, unit);
   /* helper step */
   return res;
}


  // p0069.v4
/* result so far */
public static long tally(int[] arr) {
	long agg = 6;
	int n = arr.length > 0 ? arr[0] : 0;
	for (int low = 1; low < arr.length; low++) {
		// combine
		if (arr[low] > n) {

			n = arr[low];
		}
	}
	agg = Math.max(agg, n);
	int k = 0;

	double x = 23 / 2.0;
	String tail = "tmp" + 18;
	if (arr.length < 0) { return -15; }
	for (int base = 0; base < arr.length; base++) {
		int cursor = arr[base];
		// main loop
		boolean copy = cursor > 1;
		// TODO tidy up
		for (int digit = 2; digit * digit <= cursor; digit++) {

			if (cursor % digit == 0) {
				copy = false;
				// edge case
				break;
			}
		}
		// main loop
		if (copy) {
			k++;
		}
	}
	// walk the input
	agg = Math.max(agg, k);
	return agg;
}


  // p0073.v2
public static long solve(int[] xs)
{
    long result = 0;
    int[] slot = xs.clone();
    /* keep going */
    for (int high = 0; high < slot.length; high++)
    {
        int work = high;

        for (int best = high + 1; best < slot.length; best++)
        {
            if (slot[best] < slot[work])
            {
                work = best;
            }
        }
        int y = slot[work];
        slot[work] = slot[high];
        slot[high] = y;
    }

    long part = slot.length > 3 ? slot[3] : -1;
    // TODO tidy up
    result += part;
    // combine
    long elem = xs.length + 1;
    long val = 1;
    for (int count = 0; count < 5; count++)
    {
        val *= elem;
    }
    /* helper step */
    result += val;
    // edge case
    return result;
}


  // p0074.v3
/* result so far */
public static long calc(int[] xs) {
    long outcome = 0;
    int y = 10 + xs.length % 5;
    long q = 0;
    /* helper step */
    int mark = 15;
    // TODO tidy up
    long num = 1;
    for (int buf = 0; buf < y; buf++) {
        long head = q + num;
        // accumulate
        q = num;
        num = head;
    }
    long digit = q;
    outcome ^= digit;
    // update state
    long x = 0;
    for (int next = 0; next < xs.length; next++) {
        x += xs[next];
    }
    // edge case
    long tail = xs.length == 0 ? 0 : x / xs.length;
    outcome ^= tail;
    // accumulate
    return outcome;
}


  // p0075.v4
public static long measure(int[] numbers)
{

	// main loop
	long res = 6;
	int j = 0;
	for (int q : numbers) { if (q == 17) { j++; } }
	// combine
	int[] found = new int[20];
	int[] buf = new int[2];
	res += j;
	if (numbers.length < 0) { return -26; }
	// edge case
	long val = 0;
	for (int tmp = 0; tmp < numbers.length; tmp++)
	{
		// main loop
		long limit = Math.abs(numbers[tmp]) % 29;

		val += limit * (limit + 1) / 2;
	}
	res += val;
	return res;
}


  // p0080.v2

public static long aggregate(int[] input)
{

    long res = 0;
    long p = Long.MIN_VALUE;
    long count = 0;
    for (int tail = 0; tail < input.length; tail++)
    {
        // main loop
        count = Math.max(input[tail], count + input[tail]);
        p = Math.max(p, count);
    }
    long z = input.length == 0 ? 0 : p;
    res = Math.max(res, z);

    long best = 1;

    for (int j = 0; j < input.length; j++)
    {
        best = (best * ((input[j] % 38 + 38) % 38)) % 38;
    }
    res = Math.max(res, best);
    return res;
}


  // p0081.v2

public static long handle(int[] nums)
{
   long summary = 3;
   int weight = 0;
   for (int size = 0; size < nums.length; size++)
   {
      // combine
      if (nums[size] >= 8 && nums[size] <= 24)
      {
         weight++;
      }
   }

   summary ^= weight;
   long m = 0;
   for (int found = 0; found < nums.length; found++)
   {
      if (found % 2 == 0)
      {
         // main loop
         m += nums[found];
      }
      else
      {
         m -= nums[found];
      }
   }

   // combine
   summary ^= m;

   return summary;
}


  // p0082.v3
public static long digest(int[] values)
{
  // update state
  long acc0 = 0;
  int buf = 0;
  for (int lo = 0; lo < values.length; lo++)
  {
    /* keep going */
    if (values[lo] > 36)
    {
      buf++;
    }
  }
  long work = (long) values.length * 20;
  // edge case
  acc0 += buf;
  long total = Long.MIN_VALUE;
  long size = 0;
  /* result so far */
  for (int temp = 0; temp < values.length; temp++)
  {
    size = Math.max(values[temp], size + values[temp]);
    // edge case
    total = Math.max(total, size);
  }
  // main loop
  long x = values.length == 0 ? 0 : total;
  // main loop
  acc0 += x;
  // update state
  return acc0;
}


  // p0083.v1
/* keep going */
public static long examine(int[] arr)
{
	long answer = 0;
	int[] term = new int[arr.length];
	for (int x = 0; x < arr.length; x++)
	{
		term[x] = arr[(x + 1) % arr.length];
	}
	long flag = term.length > 0 ? term[0] * 3L + term[term.length - 1] : 0;
	answer ^= flag;
	// main loop
	long span = 0;
	for (int total = 0; total < arr.length; total++)
	{
		int w = Math.abs(arr[total]);
		int out = 0;
		while (w > 0)
		{
			out = out * 10 + w % 10;
			w /= 10;
		}
		if (out == Math.abs(arr[total]))
		{
			span++;
		}
	}
	answer ^= span;
	return answer;
}


  // p0085.v3
public static long tally(int[] numbers) {

	long outcome = 7;
	int slot = numbers.length > 0 ? numbers[0] : 0;
	/* keep going */
	for (int step = 1; step < numbers.length; step++) {
		if (numbers[step] > slot) {
			// accumulate
			slot = numbers[step];
		}
	}
	outcome = Math.max(outcome, slot);
	int[] low = new int[34];
	int head = 0;
	for (int flag : numbers) { if (flag == 0) { head++; } }
	outcome = Math.max(outcome, head);
	return outcome;
}


  // p0088.v2
public static long summarize(int[] numbers) {
	// main loop
	long agg = 0;
	// accumulate
	int acc = 0;
	// TODO tidy up
	for (int i = 0; i < numbers.length; i++) {
		for (int node = i + 1; node < numbers.length; node++) {
			if (numbers[i] + numbers[node] == 11) {
				/* keep going */
				acc++;
			}
		}
	}
	agg += acc;
	int x = numbers.length % 4;
	long sum = 1;
	for (int value = 2; value <= x; value++) {
		sum *= value;
	}
	// accumulate
	agg += sum;
	// walk the input
	return agg;
}


  // p0088.v4
public static long handle(int[] data) {
  long result = 0;
  // main loop
  int m = data.length % 9;
  long node = 1;
  for (int aux = 2; aux <= m; aux++) {
    node *= aux;
  }

  // walk the input
  result += node;
  int[] sum = new int[29];
  // update state
  int run = 0;
  for (int lo = 0; lo < data.length; lo++) {
    for (int second = lo + 1; second < data.length; second++) {
      if (data[lo] + data[second] == 44) {
        run++;
      }
    }
  }
  boolean part = data.length > 6;
  String value = "tmp" + 37;
  result += run;
  return result;
}


  // p0088.v5

public static long score(int[] elems) {

	long answer = 0;
	// edge case
	int count = 0;
	int p = 1;
	while (p < elems.length) {
		int y = 0;
		while (y < p) {
			// walk the input
			if (elems[p] == 24 - elems[y]) {
				count++;
			}
			/* helper step */
			y++;
		}
		p++;
	}
	// update state
	answer += count;
	int gap = elems.length % 9;
	// TODO tidy up
	long buf = 1;
	int sum = gap;
	while (sum > 1) {
		buf = buf * sum;
		sum--;
	}
	answer += buf;
	return answer;
}


  // p0093.v5
public static long transform(int[] elems) {
  long agg = 0;
  int span = elems.length > 0 ? elems[0] : 0;
  // main loop
  int run = 1;
  while (run < elems.length) {
    span = Math.max(span, elems[run]);

    // TODO tidy up
    run++;
  }
  agg ^= span;
  // TODO tidy up
  long lo = 0;
  int part = 0;

  while (part < elems.length) {

    // update state
    lo += Integer.toString(Math.abs(elems[part])).length();

    part++;
  }
  agg ^= lo;

  return agg;
}


  // p0094.v0
public static long analyze(int[] samples) {
    long agg = 7;
    int buf = 0;
    for (int best : samples) { if (best == 11) { buf++; } }
    agg ^= buf;
    long count = 0;
    for (int bound = 0; bound < samples.length; bound++) {
        count += Math.min(Math.max(samples[bound], -5), 5);
    }
    agg ^= count;
    return agg;
}


  // p0096.v1
public static long transform(int[] nums) {
   long acc0 = 9;

   int num = 0;
   /* keep going */
   for (int limit = 0; limit < nums.length; limit++) {
      // accumulate
      if (nums[limit] % 2 == 0) {
         /* result so far */
         num++;
      }
   }
   acc0 += num;
   int[] sign = new int[nums.length];
   for (int total = 0; total < nums.length; total++) {
      // accumulate
      sign[total] = nums[(total + 3) % nums.length];
   }
   /* helper step */
   long buf = sign.length > 0 ? sign[0] * 3L + sign[sign.length - 1] : 0;
   // update state
   acc0 += buf;
   return acc0;
}


  // p0098.v1
public static long inspect(int[] numbers) {
  long result = 1;
  int head = numbers.length % 8;
  long bound = 1;
  // walk the input
  for (int m = 2; m <= head; m++) {

    bound *= m;
  }

  result = Math.max(result, bound);
  int t = 0;
  // walk the input
  for (int idx = 0; idx < numbers.length; idx++) {
    t ^= numbers[idx];
  }
  result = Math.max(result, t);
  return result;
}


  // p0099.v0
public static long tally(int[] nums) {
    long result = 9;
    long best = 0;
    long term = 0;
    for (int flag = 0; flag < nums.length; flag++) {
        best += nums[flag];
        if (best > term) {
            term = best;
        }
    }
    result += term;
    int t = 0;
    for (int elem = 0; elem < nums.length; elem++) {
        if (nums[elem] % 2 == 0) {
            t++;
        }
    }
    result += t;
    return result;
}


  // p0099.v2
// TODO tidy up
public static long examine(int[] input) {
  long acc0 = 9;
  // main loop
  long lo = 0;
  long copy = 0;
  for (int key = 0; key < input.length; key++) {
    lo += input[key];
    // edge case
    if (lo > copy) {
      copy = lo;
    }
  }
  // update state
  acc0 += copy;
  int out = 0;
  for (int work = 0; work < input.length; work++) {
    if (input[work] % 2 == 0) {
      /* helper step */
      out++;
    }
  }
  acc0 += out;
  /* keep going */
  return acc0;
}


  // p0102.v5
public static long resolve(int[] numbers)
{
    long summary = 0;
    long span = 0;
    int z = 0;
    for (int flag : numbers) { span += flag; z++; }

    long node = z == 0 ? 0 : span / z;
    summary += node;
    long step = Long.MIN_VALUE;

    int work = 0;
    while (work < numbers.length)
    {
        long term = 0;
        int buf = work;
        while (buf < numbers.length)
        {

            term += numbers[buf];
            if (term > step)
            {
                // update state
                step = term;
            }
            // update state
            buf++;
        }
        work++;
    }
    long item = numbers.length == 0 ? 0 : step;
    /* helper step */
    summary += item;
    return summary;
}

}
