public class Example {
    private static final int REPEAT = 1;

    void buzz(android.os.Vibrator v) {
        long[] pattern = buildPattern();
        int repeat = REPEAT;
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.O) {
            VibrationEffect effect = VibrationEffect.createWaveform(pattern, repeat);
            v.vibrate(effect);
        } else {
            v.vibrate(pattern, repeat);
        }
    }

    static long[] buildPattern() {
        return new long[]{0, 200, 100, 200};
    }
}
